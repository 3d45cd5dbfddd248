//! Algebra morphisms between presented algebras, and bounded-degree
//! invertibility evidence.
//!
//! A morphism is stored by its generator images and extended
//! multiplicatively and star-compatibly; `verify_morphism` certifies that
//! every defining relation of the source maps to zero in the target.

use std::sync::Arc;

use crate::ncalg::linalg::{solve_in_ring, LMat};
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::{Gen, Word};
use crate::report::CheckRecord;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub name: String,
    pub source: Arc<Presentation>,
    pub target: Arc<Presentation>,
    /// Image of the unstarred generator with the matching index, in normal
    /// form; starred generators map to the star of the stored image.
    images: Vec<NCPoly>,
}

impl AlgebraMorphism {
    pub fn new(
        name: &str,
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        images: Vec<NCPoly>,
    ) -> Result<Self> {
        if images.len() != source.num_gens() {
            return Err(Error::Unsupported(format!(
                "morphism {name}: {} images for {} generators",
                images.len(),
                source.num_gens()
            )));
        }
        let images: Vec<NCPoly> = images.iter().map(|p| target.normal_form(p)).collect();
        for (i, img) in images.iter().enumerate() {
            // A self-adjoint generator has g* = g, so its image must be
            // self-adjoint for the star-extension to be well defined.
            if source.gen_info(Gen::new(i as u16)).self_adjoint && target.star(img) != *img {
                return Err(Error::Unsupported(format!(
                    "morphism {name}: image of self-adjoint generator {} is not self-adjoint",
                    source.gen_info(Gen::new(i as u16)).name
                )));
            }
        }
        Ok(Self {
            name: name.to_string(),
            source,
            target,
            images,
        })
    }

    pub fn identity(p: Arc<Presentation>) -> Self {
        let images = (0..p.num_gens())
            .map(|i| NCPoly::from_gen(Gen::new(i as u16)))
            .collect();
        Self {
            name: format!("id_{}", p.id),
            source: p.clone(),
            target: p,
            images,
        }
    }

    pub fn gen_image(&self, g: Gen) -> NCPoly {
        let img = &self.images[g.index as usize];
        if g.star {
            self.target.star(img)
        } else {
            img.clone()
        }
    }

    pub fn apply_word(&self, w: &Word) -> NCPoly {
        let mut acc = NCPoly::one();
        for g in &w.0 {
            acc = self.target.multiply(&acc, &self.gen_image(*g));
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        let p = self.source.normal_form(p);
        let mut acc = NCPoly::zero();
        for (w, c) in p.iter() {
            acc += &self.apply_word(w).scale(c);
        }
        self.target.normal_form(&acc)
    }

    /// `other` after `self`: the composite source -> self.target == other.source -> other.target.
    pub fn then(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if self.target.id != other.source.id {
            return Err(Error::Unsupported(format!(
                "cannot compose {} : ..->{} with {} : {}->..",
                self.name, self.target.id, other.name, other.source.id
            )));
        }
        AlgebraMorphism::new(
            &format!("{} . {}", other.name, self.name),
            self.source.clone(),
            other.target.clone(),
            self.images.iter().map(|p| other.apply(p)).collect(),
        )
    }
}

/// One record per defining relation of the source (plus the star check),
/// each passing exactly when the relation maps to zero in the target.
pub fn verify_morphism(m: &AlgebraMorphism, prefix: &str) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for (k, rule) in m.source.rules.iter().enumerate() {
        let lhs = m.apply_word(&rule.lhs);
        let rhs = m.apply(&rule.rhs);
        let residual = m.target.normal_form(&(&lhs - &rhs));
        let law = format!(
            "{}({}) = {}({})",
            m.name,
            m.source.fmt_word(&rule.lhs),
            m.name,
            m.source.fmt_rhs(&rule.rhs)
        );
        out.push(CheckRecord::from_bool(
            &format!("{prefix}.relation[{k}]"),
            &law,
            residual.is_zero(),
            || format!("residual {}", m.target.fmt_poly(&residual)),
        ));
    }
    // Star compatibility on generators: the image of g* is star(image of g)
    // by construction, so the content lies in words: check on length-2 probes.
    let mut star_ok = true;
    let mut witness = String::new();
    for g in m.source.letters() {
        for h in m.source.letters() {
            let w = Word(vec![g, h]);
            let lhs = m.apply(&m.source.star(&NCPoly::from_word(w.clone())));
            let rhs = m.target.star(&m.apply(&NCPoly::from_word(w.clone())));
            if lhs != rhs {
                star_ok = false;
                witness = format!("word {}", m.source.fmt_word(&w));
                break;
            }
        }
        if !star_ok {
            break;
        }
    }
    out.push(CheckRecord::from_bool(
        &format!("{prefix}.star"),
        &format!("{} o star = star o {}", m.name, m.name),
        star_ok,
        || witness.clone(),
    ));
    out
}

pub fn morphism_verified(m: &AlgebraMorphism) -> bool {
    verify_morphism(m, "m").iter().all(|c| c.passed())
}

/// A grading of normal words conserved by every rewrite rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Signed generator degree is conserved exactly.
    Signed,
    /// Only degree parity is conserved.
    Parity,
    /// No conserved grading detected.
    None,
}

pub fn conserved_grading(p: &Presentation) -> Grading {
    let signed = p.rules.iter().all(|r| {
        let d = p.signed_degree(&r.lhs);
        r.rhs.iter().all(|(w, _)| p.signed_degree(w) == d)
    });
    if signed {
        return Grading::Signed;
    }
    let parity = p.rules.iter().all(|r| {
        let d = p.parity(&r.lhs);
        r.rhs.iter().all(|(w, _)| p.parity(w) == d)
    });
    if parity {
        return Grading::Parity;
    }
    Grading::None
}

fn homogeneous_signed(p: &Presentation, x: &NCPoly) -> Option<i64> {
    let mut it = x.iter().map(|(w, _)| p.signed_degree(w));
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

fn homogeneous_parity(p: &Presentation, x: &NCPoly) -> Option<u8> {
    let mut it = x.iter().map(|(w, _)| p.parity(w));
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

/// Searches for a two-sided inverse of `x` supported on normal words of
/// length at most `max_degree`.  Returns the inverse when the exact linear
/// system has a solution over the Laurent coefficient ring; `None` is
/// bounded-degree evidence of non-invertibility, not a proof.
pub fn solve_right_inverse(x: &NCPoly, p: &Presentation, max_degree: usize) -> Option<NCPoly> {
    let x = p.normal_form(x);
    if x.is_zero() {
        return None;
    }
    // One conserved-grading block suffices: if x is homogeneous, any inverse
    // is supported on the opposite block, because the unit sits in degree 0.
    let mut candidates: Vec<Word> = p.basis_enumerate(max_degree);
    match conserved_grading(p) {
        Grading::Signed => {
            if let Some(d) = homogeneous_signed(p, &x) {
                candidates.retain(|w| p.signed_degree(w) == -d);
            }
        }
        Grading::Parity => {
            if let Some(d) = homogeneous_parity(p, &x) {
                candidates.retain(|w| p.parity(w) == d);
            }
        }
        Grading::None => {}
    }
    if candidates.is_empty() {
        return None;
    }

    // Rows of the stacked system: coefficients of x*w and w*x over the
    // normal words each product reaches; right-hand side is the unit.
    let left_products: Vec<NCPoly> = candidates
        .iter()
        .map(|w| p.multiply(&x, &NCPoly::from_word(w.clone())))
        .collect();
    let right_products: Vec<NCPoly> = candidates
        .iter()
        .map(|w| p.multiply(&NCPoly::from_word(w.clone()), &x))
        .collect();
    let mut row_words: std::collections::BTreeSet<Word> = std::collections::BTreeSet::new();
    row_words.insert(Word::one());
    for prod in left_products.iter().chain(right_products.iter()) {
        for (w, _) in prod.iter() {
            row_words.insert(w.clone());
        }
    }
    let row_index: std::collections::BTreeMap<&Word, usize> =
        row_words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n_rows = row_words.len();
    let mut a = LMat::zeros(2 * n_rows, candidates.len());
    for (side, products) in [(0, &left_products), (1, &right_products)] {
        for (j, prod) in products.iter().enumerate() {
            for (w, c) in prod.iter() {
                a.set(side * n_rows + row_index[w], j, c.clone());
            }
        }
    }
    let mut b = vec![LaurentScalar::zero(); 2 * n_rows];
    b[row_index[&Word::one()]] = LaurentScalar::one();
    b[n_rows + row_index[&Word::one()]] = LaurentScalar::one();

    let y = solve_in_ring(&a, &b)?;
    let mut inv = NCPoly::zero();
    for (j, w) in candidates.iter().enumerate() {
        if !y[j].is_zero() {
            inv.add_term(w.clone(), y[j].clone());
        }
    }
    let inv = p.normal_form(&inv);
    if p.multiply(&x, &inv).is_one() && p.multiply(&inv, &x).is_one() {
        Some(inv)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::catalog;

    fn arc(p: Presentation) -> Arc<Presentation> {
        Arc::new(p)
    }

    #[test]
    fn even_hierarchy_map_is_a_morphism() {
        // z_i -> z_i from the 5-sphere onto the 4-sphere, top level folded
        // onto the self-adjoint generator.
        let s5 = arc(catalog::sphere(5));
        let s4 = arc(catalog::sphere(4));
        let images = (0..3).map(|i| NCPoly::from_gen(Gen::new(i))).collect();
        let f = AlgebraMorphism::new("f4", s5, s4, images).unwrap();
        assert!(verify_morphism(&f, "f4").iter().all(|c| c.passed()));
    }

    #[test]
    fn odd_hierarchy_map_is_a_morphism() {
        // z_i -> z_i, z_n -> 0 from the 4-sphere onto the 3-sphere.
        let s4 = arc(catalog::sphere(4));
        let s3 = arc(catalog::sphere(3));
        let images = vec![
            NCPoly::from_gen(Gen::new(0)),
            NCPoly::from_gen(Gen::new(1)),
            NCPoly::zero(),
        ];
        let f = AlgebraMorphism::new("f3", s4, s3, images).unwrap();
        assert!(verify_morphism(&f, "f3").iter().all(|c| c.passed()));
    }

    #[test]
    fn dropping_a_generator_breaks_the_radius_relation() {
        // z_0 -> z_0, z_1 -> 0 into the 3-sphere itself is not a morphism:
        // z_0 z_0* rewrites to 1 - z_1* z_1, and the image misses the
        // correction term.  (Into the circle it *is* one: z_0 z_0* = 1
        // there absorbs the radius.)
        let s3 = arc(catalog::sphere(3));
        let images = vec![NCPoly::from_gen(Gen::new(0)), NCPoly::zero()];
        let f = AlgebraMorphism::new("bad", s3.clone(), s3, images).unwrap();
        assert!(!verify_morphism(&f, "bad").iter().all(|c| c.passed()));
    }

    #[test]
    fn gradings_detected() {
        assert_eq!(conserved_grading(&catalog::sphere(3)), Grading::Signed);
        assert_eq!(conserved_grading(&catalog::sphere(2)), Grading::Parity);
        assert_eq!(conserved_grading(&catalog::su2()), Grading::Signed);
        assert_eq!(conserved_grading(&catalog::prolong(1)), Grading::Signed);
    }

    #[test]
    fn unitary_generator_inverts() {
        let u1 = catalog::u1();
        let v = NCPoly::from_gen(Gen::new(0));
        let inv = solve_right_inverse(&v, &u1, 2).expect("v is invertible");
        assert_eq!(inv, NCPoly::from_gen(Gen::starred(0)));
    }

    #[test]
    fn sphere_generator_has_no_bounded_inverse() {
        let s2 = catalog::sphere(2);
        let z0 = NCPoly::from_gen(Gen::new(0));
        assert!(solve_right_inverse(&z0, &s2, 4).is_none());
        let z1 = NCPoly::from_gen(Gen::new(1));
        assert!(solve_right_inverse(&z1, &s2, 4).is_none());
    }

    #[test]
    fn scalar_units_invert() {
        let s2 = catalog::sphere(2);
        let two_q = NCPoly::scalar(LaurentScalar::term(
            1,
            num_rational::BigRational::from_integer(2.into()),
        ));
        let inv = solve_right_inverse(&two_q, &s2, 0).expect("2q is a unit");
        assert!(s2.multiply(&two_q, &inv).is_one());
    }
}
