//! Linear maps out of Hopf algebras: the convolution algebra, the bundled
//! quotient maps and sections, and their verification routines.

use std::sync::Arc;

use crate::hopf::structure::HopfAlgebra;
use crate::hopf::tensor::Tensor;
use crate::ncalg::catalog;
use crate::ncalg::morphism::AlgebraMorphism;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::word::{Gen, Word};
use crate::report::CheckRecord;
use crate::{Error, Result};

type WordRule = Arc<dyn Fn(&Word) -> NCPoly + Send + Sync>;

#[derive(Clone)]
enum Kernel {
    /// An algebra map, applied letter by letter.
    Morph(AlgebraMorphism),
    /// A closed rule on normal source words.
    WordFn(WordRule),
    /// Precomposition with the source antipode.
    AfterAntipode(Box<HLinMap>),
}

/// A linear map from a Hopf algebra to a presented algebra, defined on
/// normal source words and extended linearly.
#[derive(Clone)]
pub struct HLinMap {
    pub name: String,
    pub source: HopfAlgebra,
    pub target: Arc<Presentation>,
    kernel: Kernel,
}

impl HLinMap {
    pub fn from_morphism(source: HopfAlgebra, m: AlgebraMorphism) -> Result<Self> {
        if m.source.id != source.algebra.id {
            return Err(Error::Unsupported(format!(
                "map {} starts at {}, not at the Hopf algebra {}",
                m.name, m.source.id, source.algebra.id
            )));
        }
        Ok(Self {
            name: m.name.clone(),
            target: m.target.clone(),
            source,
            kernel: Kernel::Morph(m),
        })
    }

    pub fn from_word_fn(
        name: &str,
        source: HopfAlgebra,
        target: Arc<Presentation>,
        f: impl Fn(&Word) -> NCPoly + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.to_string(),
            source,
            target,
            kernel: Kernel::WordFn(Arc::new(f)),
        }
    }

    /// `h -> self(S(h))`: for an algebra map this is its convolution inverse.
    pub fn after_antipode(&self) -> Self {
        Self {
            name: format!("{} o S", self.name),
            source: self.source.clone(),
            target: self.target.clone(),
            kernel: Kernel::AfterAntipode(Box::new(self.clone())),
        }
    }

    pub fn apply_word(&self, w: &Word) -> NCPoly {
        match &self.kernel {
            Kernel::Morph(m) => m.apply_word(w),
            Kernel::WordFn(f) => self.target.normal_form(&f(w)),
            Kernel::AfterAntipode(inner) => {
                let s = self.source.antipode_word(w);
                inner.apply_linear(&s)
            }
        }
    }

    /// Applies to an already-normal source polynomial.
    fn apply_linear(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.iter() {
            out = &out + &self.apply_word(w).scale(c);
        }
        self.target.normal_form(&out)
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        self.apply_linear(&self.source.algebra.normal_form(p))
    }

    pub fn is_unital(&self) -> bool {
        self.apply_word(&Word::one()).is_one()
    }
}

/// Convolution product `(f * g)(h) = f(h_(1)) g(h_(2))`.
pub fn convolve(f: &HLinMap, g: &HLinMap) -> HLinMap {
    assert_eq!(f.source.algebra.id, g.source.algebra.id);
    assert_eq!(f.target.id, g.target.id);
    let (fc, gc) = (f.clone(), g.clone());
    let source = f.source.clone();
    let target = f.target.clone();
    HLinMap::from_word_fn(
        &format!("{} * {}", f.name, g.name),
        f.source.clone(),
        f.target.clone(),
        move |w| {
            let mut out = NCPoly::zero();
            for (legs, c) in source.coproduct_word(w).terms() {
                let prod = target.multiply(&fc.apply_word(&legs[0]), &gc.apply_word(&legs[1]));
                out = &out + &prod.scale(c);
            }
            out
        },
    )
}

/// The convolution unit `eta o epsilon`.
pub fn convolution_unit(source: HopfAlgebra, target: Arc<Presentation>) -> HLinMap {
    let s = source.clone();
    HLinMap::from_word_fn("eta epsilon", source, target, move |w| {
        NCPoly::scalar(s.counit_word(w))
    })
}

/// Checks `(f * g)(h) = epsilon(h) 1 = (g * f)(h)` on the degree-`d` basis.
pub fn is_convolution_inverse(f: &HLinMap, g: &HLinMap, d: usize) -> bool {
    let fg = convolve(f, g);
    let gf = convolve(g, f);
    for w in f.source.algebra.basis_enumerate(d) {
        let unit = NCPoly::scalar(f.source.counit_word(&w));
        if fg.apply_word(&w) != unit || gf.apply_word(&w) != unit {
            return false;
        }
    }
    true
}

/// Checks that an algebra morphism between Hopf algebras respects the
/// coalgebra structure: Δ∘m = (m⊗m)∘Δ and ε∘m = ε on the degree-`d` basis.
pub fn verify_hopf_map(
    m: &AlgebraMorphism,
    src: &HopfAlgebra,
    tgt: &HopfAlgebra,
    d: usize,
    prefix: &str,
) -> Vec<CheckRecord> {
    let mut out = crate::ncalg::morphism::verify_morphism(m, prefix);
    let mut comul = Ok(());
    let mut counit = Ok(());
    let t_legs = vec![tgt.algebra.clone()];
    for w in src.algebra.basis_enumerate(d) {
        let tag = || src.algebra.fmt_word(&w);
        if comul.is_ok() {
            let lhs = tgt.coproduct(&m.apply_word(&w));
            let rhs = src
                .coproduct_word(&w)
                .map_leg(0, &t_legs, |x| Tensor::from_poly(tgt.algebra.clone(), &m.apply_word(x)))
                .map_leg(1, &t_legs, |x| Tensor::from_poly(tgt.algebra.clone(), &m.apply_word(x)));
            if lhs != rhs {
                comul = Err(tag());
            }
        }
        if counit.is_ok() && tgt.counit(&m.apply_word(&w)) != src.counit_word(&w) {
            counit = Err(tag());
        }
    }
    out.push(
        CheckRecord::from_bool(
            format!("{prefix}.comultiplicative"),
            format!("Delta o {0} = ({0} (x) {0}) o Delta", m.name),
            comul.is_ok(),
            || format!("fails at {}", comul.as_ref().err().cloned().unwrap_or_default()),
        )
        .with_bounded_degree(d as u32),
    );
    out.push(
        CheckRecord::from_bool(
            format!("{prefix}.counit_compatible"),
            format!("epsilon o {0} = epsilon", m.name),
            counit.is_ok(),
            || format!("fails at {}", counit.as_ref().err().cloned().unwrap_or_default()),
        )
        .with_bounded_degree(d as u32),
    );
    out
}

/// Checks that `iota` splits `pi` as a unital bicolinear section on the
/// degree-`d` basis of the quotient Hopf algebra.
pub fn verify_section(
    iota: &HLinMap,
    tgt: &HopfAlgebra,
    pi: &AlgebraMorphism,
    d: usize,
    prefix: &str,
) -> Vec<CheckRecord> {
    let hbar = &iota.source;
    assert_eq!(pi.source.id, tgt.algebra.id);
    assert_eq!(pi.target.id, hbar.algebra.id);
    let mut out = Vec::new();
    out.push(CheckRecord::from_bool(
        format!("{prefix}.unital"),
        "iota(1) = 1",
        iota.is_unital(),
        || "iota(1) != 1".to_string(),
    ));
    let mut split = Ok(());
    let mut left = Ok(());
    let mut right = Ok(());
    let mut counit = Ok(());
    let hbar_leg = vec![hbar.algebra.clone()];
    let h_leg = vec![tgt.algebra.clone()];
    for w in hbar.algebra.basis_enumerate(d) {
        let tag = || hbar.algebra.fmt_word(&w);
        let img = iota.apply_word(&w);
        if split.is_ok() && pi.apply(&img) != NCPoly::from_word(w.clone()) {
            split = Err(tag());
        }
        let t = tgt.coproduct(&img);
        let dbar = hbar.coproduct_word(&w);
        if left.is_ok() {
            let obs = t.map_leg(0, &hbar_leg, |x| {
                Tensor::from_poly(hbar.algebra.clone(), &pi.apply_word(x))
            });
            let exp = dbar.map_leg(1, &h_leg, |x| {
                Tensor::from_poly(tgt.algebra.clone(), &iota.apply_word(x))
            });
            if obs != exp {
                left = Err(tag());
            }
        }
        if right.is_ok() {
            let obs = t.map_leg(1, &hbar_leg, |x| {
                Tensor::from_poly(hbar.algebra.clone(), &pi.apply_word(x))
            });
            let exp = dbar.map_leg(0, &h_leg, |x| {
                Tensor::from_poly(tgt.algebra.clone(), &iota.apply_word(x))
            });
            if obs != exp {
                right = Err(tag());
            }
        }
        if counit.is_ok() && tgt.counit(&img) != hbar.counit_word(&w) {
            counit = Err(tag());
        }
    }
    let rec = |name: &str, law: &str, r: std::result::Result<(), String>| {
        CheckRecord::from_bool(format!("{prefix}.{name}"), law, r.is_ok(), || {
            format!("fails at {}", r.as_ref().err().cloned().unwrap_or_default())
        })
        .with_bounded_degree(d as u32)
    };
    out.push(rec("splits", "pi(iota(h)) = h", split));
    out.push(rec(
        "left_colinear",
        "(pi (x) id) Delta iota = (id (x) iota) Delta",
        left,
    ));
    out.push(rec(
        "right_colinear",
        "(id (x) pi) Delta iota = (iota (x) id) Delta",
        right,
    ));
    out.push(rec("counit", "epsilon(iota(h)) = epsilon(h)", counit));
    out
}

fn arc(p: Presentation) -> Arc<Presentation> {
    Arc::new(p)
}

/// `O(SU_q(2)) -> O(S^2_q)`, `a -> z_0`, `b -> z_1`.
pub fn f2() -> AlgebraMorphism {
    let su2 = arc(catalog::su2());
    let s2 = arc(catalog::sphere(2));
    let images = vec![NCPoly::from_gen(Gen::new(0)), NCPoly::from_gen(Gen::new(1))];
    AlgebraMorphism::new("f2", su2, s2, images).expect("bundled map is valid")
}

/// `O(SU_q(2)) -> O(U(1))`, `a -> v`, `b -> 0`.
pub fn f1f2() -> AlgebraMorphism {
    let su2 = arc(catalog::su2());
    let u1 = arc(catalog::u1());
    let images = vec![NCPoly::from_gen(Gen::new(0)), NCPoly::zero()];
    AlgebraMorphism::new("f1 f2", su2, u1, images).expect("bundled map is valid")
}

/// `O(SU_q(2)) -> O(Z_2)`, `a -> u`, `b -> 0`.
pub fn pi_su2_z2() -> AlgebraMorphism {
    let su2 = arc(catalog::su2());
    let z2 = arc(catalog::z2());
    let images = vec![NCPoly::from_gen(Gen::new(0)), NCPoly::zero()];
    AlgebraMorphism::new("pi", su2, z2, images).expect("bundled map is valid")
}

/// `O(U(1)) -> O(Z_2)`, `v -> u`.
pub fn pi2() -> AlgebraMorphism {
    let u1 = arc(catalog::u1());
    let z2 = arc(catalog::z2());
    AlgebraMorphism::new("pi2", u1, z2, vec![NCPoly::from_gen(Gen::new(0))])
        .expect("bundled map is valid")
}

/// `O(U(1)) -> O(Z_p)`, `v -> w`.
pub fn pi_p(p: u32) -> AlgebraMorphism {
    let u1 = arc(catalog::u1());
    let zp = arc(catalog::zp(p));
    AlgebraMorphism::new("pi_p", u1, zp, vec![NCPoly::from_gen(Gen::new(0))])
        .expect("bundled map is valid")
}

/// Even-to-odd sphere inclusion step `O(S^{2n}_q) <- O(S^{2n+1}_q)`:
/// every `z_i` is kept.
pub fn f_even(n: usize) -> AlgebraMorphism {
    let src = arc(catalog::sphere(2 * n + 1));
    let tgt = arc(catalog::sphere(2 * n));
    let images = (0..=n).map(|i| NCPoly::from_gen(Gen::new(i as u16))).collect();
    AlgebraMorphism::new("f_even", src, tgt, images).expect("bundled map is valid")
}

/// Odd-from-even sphere step `O(S^{2n}_q) -> O(S^{2n-1}_q)`: `z_n -> 0`.
pub fn f_odd(n: usize) -> AlgebraMorphism {
    let src = arc(catalog::sphere(2 * n));
    let tgt = arc(catalog::sphere(2 * n - 1));
    let mut images: Vec<NCPoly> = (0..n).map(|i| NCPoly::from_gen(Gen::new(i as u16))).collect();
    images.push(NCPoly::zero());
    AlgebraMorphism::new("f_odd", src, tgt, images).expect("bundled map is valid")
}

/// The linear (non-algebra) section `O(Z_2) -> O(SU_q(2))`: `1 -> 1`,
/// `u -> a`.
pub fn iota_z2_su2() -> Result<HLinMap> {
    let z2 = HopfAlgebra::bundled("z2")?;
    let su2 = arc(catalog::su2());
    Ok(HLinMap::from_word_fn("iota", z2, su2, |w| {
        NCPoly::from_word(Word(vec![Gen::new(0); w.len()]))
    }))
}

/// The linear section `O(U(1)) -> O(SU_q(2))`: `v^n -> a^n`, `v*^n -> a*^n`.
pub fn iota_u1_su2() -> Result<HLinMap> {
    let u1 = HopfAlgebra::bundled("u1")?;
    let su2 = arc(catalog::su2());
    Ok(HLinMap::from_word_fn("iota_U(1)", u1, su2, |w| {
        let starred = w.0.first().map(|g| g.star).unwrap_or(false);
        let g = if starred { Gen::starred(0) } else { Gen::new(0) };
        NCPoly::from_word(Word(vec![g; w.len()]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::morphism::morphism_verified;
    use crate::ncalg::scalar::LaurentScalar;

    #[test]
    fn bundled_quotient_maps_are_morphisms_and_hopf_maps() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let u1 = HopfAlgebra::bundled("u1").unwrap();
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let zp3 = HopfAlgebra::bundled("zp:3").unwrap();
        for (m, s, t) in [
            (f1f2(), &su2, &u1),
            (pi_su2_z2(), &su2, &z2),
            (pi2(), &u1, &z2),
            (pi_p(3), &u1, &zp3),
        ] {
            for r in verify_hopf_map(&m, s, t, 3, "t") {
                assert!(r.passed(), "{} fails {}: {:?}", m.name, r.id, r.witness);
            }
        }
    }

    #[test]
    fn f2_is_a_morphism_with_convolution_inverse_f2_after_antipode() {
        let m = f2();
        assert!(morphism_verified(&m));
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let f = HLinMap::from_morphism(su2, m).unwrap();
        let finv = f.after_antipode();
        // f2(S(b)) = -q^{-1} z_1.
        let b = Word::single(Gen::new(1));
        let z1 = NCPoly::from_gen(Gen::new(1));
        assert_eq!(finv.apply_word(&b), z1.scale(&-LaurentScalar::q_pow(-1)));
        assert!(is_convolution_inverse(&f, &finv, 2));
    }

    #[test]
    fn convolution_unit_and_associativity() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let f = HLinMap::from_morphism(su2.clone(), f2()).unwrap();
        let e = convolution_unit(su2.clone(), f.target.clone());
        let g = f.after_antipode();
        let left = convolve(&convolve(&f, &g), &f);
        let right = convolve(&f, &convolve(&g, &f));
        for w in su2.algebra.basis_enumerate(2) {
            assert_eq!(convolve(&f, &e).apply_word(&w), f.apply_word(&w));
            assert_eq!(convolve(&e, &f).apply_word(&w), f.apply_word(&w));
            assert_eq!(left.apply_word(&w), right.apply_word(&w));
        }
    }

    #[test]
    fn sphere_hierarchy_steps_are_morphisms() {
        assert!(morphism_verified(&f_even(1)));
        assert!(morphism_verified(&f_even(2)));
        assert!(morphism_verified(&f_odd(1)));
        assert!(morphism_verified(&f_odd(2)));
    }

    #[test]
    fn iota_sections_split_and_are_bicolinear() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let iota = iota_z2_su2().unwrap();
        for r in verify_section(&iota, &su2, &pi_su2_z2(), 1, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
        let iota_u1 = iota_u1_su2().unwrap();
        for r in verify_section(&iota_u1, &su2, &f1f2(), 4, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn a_wrong_section_fails_the_splitting_check() {
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let su2_pres = arc(catalog::su2());
        // u -> b cannot split pi, because pi(b) = 0.
        let bad = HLinMap::from_word_fn("bad", z2, su2_pres, |w| {
            if w.is_one() {
                NCPoly::one()
            } else {
                NCPoly::from_gen(Gen::new(1))
            }
        });
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let records = verify_section(&bad, &su2, &pi_su2_z2(), 1, "t");
        assert!(records.iter().any(|r| r.id == "t.splits" && !r.passed()));
    }
}
