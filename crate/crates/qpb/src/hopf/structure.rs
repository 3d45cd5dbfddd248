//! Hopf-algebra structure maps on presented *-algebras.
//!
//! Structure maps are stored on letters and extended multiplicatively
//! (antimultiplicatively for the antipode).  Letters without an explicit
//! entry fall back to the *-structure: Δ(g*) = (*⊗*)Δ(g), ε(g*) = ε(g)
//! (coefficients are real), S(g*) = (S⁻¹(g))*, S⁻¹(g*) = (S(g))*.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::hopf::tensor::Tensor;
use crate::ncalg::catalog;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::{HopfSpec, Presentation};
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::{Gen, Word};
use crate::report::CheckRecord;
use crate::{Error, Result};

#[derive(Clone)]
pub struct HopfAlgebra {
    pub algebra: Arc<Presentation>,
    coproduct: BTreeMap<Gen, Vec<(LaurentScalar, Word, Word)>>,
    counit: BTreeMap<Gen, LaurentScalar>,
    antipode: BTreeMap<Gen, NCPoly>,
    antipode_inv: BTreeMap<Gen, NCPoly>,
}

impl HopfAlgebra {
    pub fn new(algebra: Arc<Presentation>, spec: HopfSpec) -> Result<Self> {
        let h = Self {
            algebra,
            coproduct: spec.coproduct.into_iter().collect(),
            counit: spec.counit.into_iter().collect(),
            antipode: spec.antipode.into_iter().collect(),
            antipode_inv: spec.antipode_inv.into_iter().collect(),
        };
        for g in h.algebra.letters() {
            let plain = Gen::new(g.index);
            fn covered<V>(m: &BTreeMap<Gen, V>, g: Gen, plain: Gen) -> bool {
                m.contains_key(&g) || m.contains_key(&plain)
            }
            if !(covered(&h.coproduct, g, plain)
                && covered(&h.counit, g, plain)
                && covered(&h.antipode, g, plain)
                && covered(&h.antipode_inv, g, plain))
            {
                return Err(Error::Unsupported(format!(
                    "hopf structure of {} misses letter {}",
                    h.algebra.id,
                    h.algebra.fmt_gen(g)
                )));
            }
        }
        Ok(h)
    }

    pub fn bundled(id: &str) -> Result<Self> {
        let (p, spec) = catalog::bundled_hopf(id)?;
        Self::new(Arc::new(p), spec)
    }

    pub fn id(&self) -> &str {
        &self.algebra.id
    }

    fn pair(&self) -> Vec<Arc<Presentation>> {
        vec![self.algebra.clone(), self.algebra.clone()]
    }

    pub fn coproduct_gen(&self, g: Gen) -> Tensor {
        let mut out = Tensor::zero(self.pair());
        if let Some(entries) = self.coproduct.get(&g) {
            for (c, w1, w2) in entries {
                out.add_term(vec![w1.clone(), w2.clone()], c.clone());
            }
        } else {
            let entries = self
                .coproduct
                .get(&Gen::new(g.index))
                .expect("validated at construction");
            for (c, w1, w2) in entries {
                out.add_term(
                    vec![self.algebra.star_word(w1), self.algebra.star_word(w2)],
                    c.clone(),
                );
            }
        }
        out
    }

    pub fn counit_gen(&self, g: Gen) -> LaurentScalar {
        self.counit
            .get(&g)
            .or_else(|| self.counit.get(&Gen::new(g.index)))
            .expect("validated at construction")
            .clone()
    }

    pub fn antipode_gen(&self, g: Gen) -> NCPoly {
        match self.antipode.get(&g) {
            Some(p) => p.clone(),
            None => {
                let inv = self
                    .antipode_inv
                    .get(&Gen::new(g.index))
                    .expect("validated at construction");
                self.algebra.star(inv)
            }
        }
    }

    pub fn antipode_inv_gen(&self, g: Gen) -> NCPoly {
        match self.antipode_inv.get(&g) {
            Some(p) => p.clone(),
            None => {
                let s = self
                    .antipode
                    .get(&Gen::new(g.index))
                    .expect("validated at construction");
                self.algebra.star(s)
            }
        }
    }

    /// Δ on a word as the product of letter coproducts.  The input word is
    /// not normalized first, so rule sides can be compared honestly.
    pub fn coproduct_word(&self, w: &Word) -> Tensor {
        let mut out = Tensor::unit(self.pair());
        for &g in &w.0 {
            out = out.mul(&self.coproduct_gen(g));
        }
        out
    }

    pub fn coproduct(&self, p: &NCPoly) -> Tensor {
        let nf = self.algebra.normal_form(p);
        let mut out = Tensor::zero(self.pair());
        for (w, c) in nf.iter() {
            out += &self.coproduct_word(w).scale(c);
        }
        out
    }

    /// Iterated coproduct with `k ≥ 1` output legs.
    pub fn iterated_coproduct(&self, p: &NCPoly, k: usize) -> Tensor {
        assert!(k >= 1);
        if k == 1 {
            return Tensor::from_poly(self.algebra.clone(), &self.algebra.normal_form(p));
        }
        let mut t = self.coproduct(p);
        while t.num_legs() < k {
            let last = t.num_legs() - 1;
            t = t.map_leg(last, &self.pair(), |w| self.coproduct_word(w));
        }
        t
    }

    pub fn counit_word(&self, w: &Word) -> LaurentScalar {
        let mut out = LaurentScalar::one();
        for &g in &w.0 {
            out = &out * &self.counit_gen(g);
        }
        out
    }

    pub fn counit(&self, p: &NCPoly) -> LaurentScalar {
        let nf = self.algebra.normal_form(p);
        let mut out = LaurentScalar::zero();
        for (w, c) in nf.iter() {
            out += &(&self.counit_word(w) * c);
        }
        out
    }

    /// S on a word: reversed product of letter antipodes, normalized.
    pub fn antipode_word(&self, w: &Word) -> NCPoly {
        let images: Vec<NCPoly> = w.0.iter().rev().map(|&g| self.antipode_gen(g)).collect();
        let refs: Vec<&NCPoly> = images.iter().collect();
        self.algebra.multiply_all(&refs)
    }

    pub fn antipode(&self, p: &NCPoly) -> NCPoly {
        let nf = self.algebra.normal_form(p);
        let mut out = NCPoly::zero();
        for (w, c) in nf.iter() {
            out = &out + &self.antipode_word(w).scale(c);
        }
        out
    }

    pub fn antipode_inv_word(&self, w: &Word) -> NCPoly {
        let images: Vec<NCPoly> = w.0.iter().rev().map(|&g| self.antipode_inv_gen(g)).collect();
        let refs: Vec<&NCPoly> = images.iter().collect();
        self.algebra.multiply_all(&refs)
    }

    pub fn antipode_inv(&self, p: &NCPoly) -> NCPoly {
        let nf = self.algebra.normal_form(p);
        let mut out = NCPoly::zero();
        for (w, c) in nf.iter() {
            out = &out + &self.antipode_inv_word(w).scale(c);
        }
        out
    }

    /// All Hopf-axiom checks on the degree-`d` basis, plus well-definedness
    /// of every structure map on the defining relations.
    pub fn verify_axioms(&self, d: usize, prefix: &str) -> Vec<CheckRecord> {
        let mut out = Vec::new();
        let p = &self.algebra;
        let h_leg = vec![p.clone() as Arc<Presentation>];

        // Well-definedness: each structure map agrees on both sides of
        // every rewrite rule (the left side evaluated letter by letter).
        let mut dws = Ok(());
        let mut ews = Ok(());
        let mut sws = Ok(());
        let mut siws = Ok(());
        for (k, rule) in p.rules.iter().enumerate() {
            let tag = || format!("rule {}: {}", k, p.fmt_word(&rule.lhs));
            let rhs = &rule.rhs;
            if dws.is_ok() && self.coproduct_word(&rule.lhs) != self.coproduct(rhs) {
                dws = Err(tag());
            }
            if ews.is_ok() && self.counit_word(&rule.lhs) != self.counit(rhs) {
                ews = Err(tag());
            }
            if sws.is_ok() && self.antipode_word(&rule.lhs) != self.antipode(rhs) {
                sws = Err(tag());
            }
            if siws.is_ok() && self.antipode_inv_word(&rule.lhs) != self.antipode_inv(rhs) {
                siws = Err(tag());
            }
        }
        let welldef = |name: &str, law: &str, r: std::result::Result<(), String>| {
            CheckRecord::from_bool(
                format!("{prefix}.welldef.{name}"),
                law,
                r.is_ok(),
                || r.as_ref().err().cloned().unwrap_or_default(),
            )
        };
        out.push(welldef(
            "coproduct",
            "Delta(l) = Delta(r) for every defining relation l = r",
            dws,
        ));
        out.push(welldef(
            "counit",
            "epsilon(l) = epsilon(r) for every defining relation l = r",
            ews,
        ));
        out.push(welldef(
            "antipode",
            "S(l) = S(r) for every defining relation l = r",
            sws,
        ));
        out.push(welldef(
            "antipode_inv",
            "S^{-1}(l) = S^{-1}(r) for every defining relation l = r",
            siws,
        ));

        // Pointwise axioms on the basis.
        let mut coassoc = Ok(());
        let mut counit_law = Ok(());
        let mut antipode_law = Ok(());
        let mut bijective = Ok(());
        let mut star_coproduct = Ok(());
        let mut star_counit = Ok(());
        for w in p.basis_enumerate(d) {
            let tag = || p.fmt_word(&w);
            let wp = NCPoly::from_word(w.clone());
            let t = self.coproduct_word(&w);
            if coassoc.is_ok() {
                let left = t.map_leg(0, &self.pair(), |x| self.coproduct_word(x));
                let right = t.map_leg(1, &self.pair(), |x| self.coproduct_word(x));
                if left != right {
                    coassoc = Err(tag());
                }
            }
            if counit_law.is_ok() {
                let expect = Tensor::from_poly(p.clone(), &wp);
                let left = t.map_leg(0, &[], |x| {
                    let mut s = Tensor::zero(vec![]);
                    s.add_term(vec![], self.counit_word(x));
                    s
                });
                let right = t.map_leg(1, &[], |x| {
                    let mut s = Tensor::zero(vec![]);
                    s.add_term(vec![], self.counit_word(x));
                    s
                });
                if left != expect || right != expect {
                    counit_law = Err(tag());
                }
            }
            if antipode_law.is_ok() {
                let expect = NCPoly::scalar(self.counit_word(&w));
                let left = t
                    .map_leg(0, &h_leg, |x| {
                        Tensor::from_poly(p.clone(), &self.antipode_word(x))
                    })
                    .merge_legs(0)
                    .as_poly();
                let right = t
                    .map_leg(1, &h_leg, |x| {
                        Tensor::from_poly(p.clone(), &self.antipode_word(x))
                    })
                    .merge_legs(0)
                    .as_poly();
                if left != expect || right != expect {
                    antipode_law = Err(tag());
                }
            }
            if bijective.is_ok()
                && (self.antipode(&self.antipode_inv_word(&w)) != wp
                    || self.antipode_inv(&self.antipode_word(&w)) != wp)
            {
                bijective = Err(tag());
            }
            if star_coproduct.is_ok() {
                let starred = self.coproduct(&p.star(&wp));
                let both = t
                    .map_leg(0, &h_leg, |x| {
                        Tensor::from_poly(p.clone(), &p.star(&NCPoly::from_word(x.clone())))
                    })
                    .map_leg(1, &h_leg, |x| {
                        Tensor::from_poly(p.clone(), &p.star(&NCPoly::from_word(x.clone())))
                    });
                if starred != both {
                    star_coproduct = Err(tag());
                }
            }
            if star_counit.is_ok() && self.counit(&p.star(&wp)) != self.counit_word(&w) {
                star_counit = Err(tag());
            }
        }
        let pointwise = |name: &str, law: &str, r: std::result::Result<(), String>| {
            CheckRecord::from_bool(format!("{prefix}.{name}"), law, r.is_ok(), || {
                format!("fails at {}", r.as_ref().err().cloned().unwrap_or_default())
            })
            .with_bounded_degree(d as u32)
        };
        out.push(pointwise(
            "coassoc",
            "(Delta (x) id)Delta = (id (x) Delta)Delta",
            coassoc,
        ));
        out.push(pointwise(
            "counit_law",
            "(epsilon (x) id)Delta = id = (id (x) epsilon)Delta",
            counit_law,
        ));
        out.push(pointwise(
            "antipode_law",
            "m(S (x) id)Delta = eta epsilon = m(id (x) S)Delta",
            antipode_law,
        ));
        out.push(pointwise(
            "antipode_bijective",
            "S S^{-1} = id = S^{-1} S",
            bijective,
        ));
        out.push(pointwise(
            "star_coproduct",
            "Delta(x*) = (* (x) *)(Delta(x))",
            star_coproduct,
        ));
        out.push(pointwise(
            "star_counit",
            "epsilon(x*) = epsilon(x)",
            star_counit,
        ));
        out
    }

    pub fn axioms_hold(&self, d: usize) -> bool {
        self.verify_axioms(d, "hopf").iter().all(|c| c.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_coproduct_of_a_matches_the_matrix_corepresentation() {
        let h = HopfAlgebra::bundled("su2").unwrap();
        let a = Gen::new(0);
        let b = Gen::new(1);
        let bs = Gen::starred(1);
        let t = h.coproduct_gen(a);
        assert_eq!(t.num_terms(), 2);
        assert_eq!(
            t.coeff(&[Word::single(a), Word::single(a)]),
            LaurentScalar::one()
        );
        assert_eq!(
            t.coeff(&[Word::single(b), Word::single(bs)]),
            -LaurentScalar::q_pow(-1)
        );
    }

    #[test]
    fn su2_antipode_law_on_a_uses_the_unit_sphere_relation() {
        // m(S (x) id)Delta(a) = a*a + q^{-2} b b* = 1.
        let h = HopfAlgebra::bundled("su2").unwrap();
        let a = NCPoly::from_gen(Gen::new(0));
        let t = h.coproduct(&a);
        let alg = h.algebra.clone();
        let lhs = t
            .map_leg(0, &[alg.clone()], |x| {
                Tensor::from_poly(alg.clone(), &h.antipode_word(x))
            })
            .merge_legs(0)
            .as_poly();
        assert!(lhs.is_one());
    }

    #[test]
    fn bundled_hopf_algebras_satisfy_all_axioms() {
        for id in ["z2", "u1", "zp:3", "su2"] {
            let h = HopfAlgebra::bundled(id).unwrap();
            let d = if id == "su2" { 3 } else { 4 };
            let records = h.verify_axioms(d, "t");
            for r in &records {
                assert!(r.passed(), "{} fails {}: {:?}", id, r.id, r.witness);
            }
        }
    }

    #[test]
    fn antipode_examples() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        // S(b*) = -q b*.
        let bs = NCPoly::from_gen(Gen::starred(1));
        assert_eq!(su2.antipode(&bs), bs.scale(&-LaurentScalar::q_pow(1)));
        // S(v^k) = v^{-k} on the circle.
        let u1 = HopfAlgebra::bundled("u1").unwrap();
        let v3 = NCPoly::from_word(Word(vec![Gen::new(0); 3]));
        let vs3 = NCPoly::from_word(Word(vec![Gen::starred(0); 3]));
        assert_eq!(u1.antipode(&v3), vs3);
    }

    #[test]
    fn zp_starred_letter_falls_back_to_the_power_expansion() {
        // In O(Z_3) the star of w normalizes to w^2 and Delta follows suit.
        let h = HopfAlgebra::bundled("zp:3").unwrap();
        let t = h.coproduct(&NCPoly::from_gen(Gen::starred(0)));
        let w2 = Word(vec![Gen::new(0); 2]);
        assert_eq!(t.num_terms(), 1);
        assert_eq!(t.coeff(&[w2.clone(), w2]), LaurentScalar::one());
    }

    #[test]
    fn corrupted_antipode_fails_the_axiom_check() {
        let (p, mut spec) = catalog::bundled_hopf("su2").unwrap();
        for (g, img) in spec.antipode.iter_mut() {
            if *g == Gen::new(1) {
                *img = NCPoly::from_term(Word::single(Gen::new(1)), LaurentScalar::q_pow(-1));
            }
        }
        let h = HopfAlgebra::new(Arc::new(p), spec).unwrap();
        let records = h.verify_axioms(2, "t");
        assert!(records
            .iter()
            .any(|r| r.id == "t.antipode_law" && !r.passed()));
    }
}
