//! Strong connections on principal comodule algebras.
//!
//! A bundle is either a plain comodule algebra or a prolonged one living
//! inside a cotensor product; connection values are tensors whose "total
//! algebra" factor occupies a block of one or two legs.

use std::sync::Arc;

use crate::comod::{Coaction, CotensorSpace};
use crate::hopf::structure::HopfAlgebra;
use crate::hopf::tensor::Tensor;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::word::{Gen, Word};
use crate::report::CheckRecord;

/// The total algebra of a principal comodule algebra, with its coaction.
#[derive(Clone)]
pub enum Bundle {
    /// A presented algebra with a right `H`-coaction.
    Plain(Coaction),
    /// `Abar box_{Hbar} H` with the prolonged coaction `id (x) Delta`.
    Prolonged(CotensorSpace),
}

impl Bundle {
    pub fn hopf(&self) -> &HopfAlgebra {
        match self {
            Bundle::Plain(co) => &co.hopf,
            Bundle::Prolonged(cot) => &cot.lambda.hopf,
        }
    }

    /// Number of tensor legs one total-algebra element occupies.
    pub fn width(&self) -> usize {
        match self {
            Bundle::Plain(_) => 1,
            Bundle::Prolonged(_) => 2,
        }
    }

    pub fn a_legs(&self) -> Vec<Arc<Presentation>> {
        match self {
            Bundle::Plain(co) => vec![co.algebra.clone()],
            Bundle::Prolonged(cot) => cot.legs(),
        }
    }

    pub fn unit_block(&self) -> Tensor {
        Tensor::unit(self.a_legs())
    }

    /// Applies the coaction to the block starting at `start`, inserting the
    /// structure leg immediately after the block.
    pub fn coact_block(&self, t: &Tensor, start: usize) -> Tensor {
        match self {
            Bundle::Plain(co) => t.map_leg(start, &co.legs(), |w| co.apply_word(w)),
            Bundle::Prolonged(cot) => {
                let h = cot.lambda.hopf.clone();
                t.map_leg(start + 1, &[h.algebra.clone(), h.algebra.clone()], move |x| {
                    h.coproduct_word(x)
                })
            }
        }
    }

    /// Multiplies two adjacent blocks at `start` into one block.
    pub fn multiply_blocks(&self, t: &Tensor, start: usize) -> Tensor {
        match self.width() {
            1 => t.merge_legs(start),
            2 => {
                let mut perm: Vec<usize> = (0..t.num_legs()).collect();
                perm.swap(start + 1, start + 2);
                let swapped = t.permute_legs(&perm);
                swapped.merge_legs(start).merge_legs(start + 1)
            }
            _ => unreachable!(),
        }
    }

    /// For prolonged bundles: the block at `start` satisfies the cotensor
    /// condition in every term.  Plain blocks are members by definition.
    pub fn block_is_member(&self, t: &Tensor, start: usize) -> bool {
        match self {
            Bundle::Plain(_) => true,
            Bundle::Prolonged(cot) => {
                let left = t.map_leg(start, &cot.rho.legs(), |w| cot.rho.apply_word(w));
                let right = t.map_leg(start + 1, &cot.lambda.legs(), |x| cot.lambda.apply_word(x));
                left == right
            }
        }
    }
}

type ConnRule = Arc<dyn Fn(&Word) -> Tensor + Send + Sync>;

/// A strong connection `l: H -> A (x) A`, tabulated on normal `H`-words
/// and extended linearly.
#[derive(Clone)]
pub struct StrongConnection {
    pub name: String,
    pub bundle: Bundle,
    rule: ConnRule,
}

impl StrongConnection {
    pub fn new(
        name: &str,
        bundle: Bundle,
        rule: impl Fn(&Word) -> Tensor + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.to_string(),
            bundle,
            rule: Arc::new(rule),
        }
    }

    pub fn value_legs(&self) -> Vec<Arc<Presentation>> {
        let mut legs = self.bundle.a_legs();
        legs.extend(self.bundle.a_legs());
        legs
    }

    pub fn evaluate_word(&self, h: &Word) -> Tensor {
        (self.rule)(h)
    }

    pub fn evaluate(&self, p: &NCPoly) -> Tensor {
        let nf = self.bundle.hopf().algebra.normal_form(p);
        let mut out = Tensor::zero(self.value_legs());
        for (w, c) in nf.iter() {
            out += &self.evaluate_word(w).scale(c);
        }
        out
    }

    /// The four axioms plus the translation-map identity, on the
    /// degree-`d` basis of `H`; prolonged bundles also get a cotensor
    /// membership record for both value halves.
    pub fn verify(&self, d: usize, prefix: &str) -> Vec<CheckRecord> {
        let h = self.bundle.hopf().clone();
        let w = self.bundle.width();

        let unit_ok = {
            let expect = self.bundle.unit_block().outer(&self.bundle.unit_block());
            self.evaluate_word(&Word::one()) == expect
        };
        let mut mu_ell = Ok(());
        let mut right_col = Ok(());
        let mut left_col = Ok(());
        let mut galois = Ok(());
        let mut member = Ok(());
        for hw in h.algebra.basis_enumerate(d) {
            let tag = || h.algebra.fmt_word(&hw);
            let val = self.evaluate_word(&hw);
            if mu_ell.is_ok() {
                let prod = self.bundle.multiply_blocks(&val, 0);
                let expect = self.bundle.unit_block().scale(&h.counit_word(&hw));
                if prod != expect {
                    mu_ell = Err(tag());
                }
            }
            if right_col.is_ok() {
                let lhs = h.coproduct_word(&hw).map_leg(0, &self.value_legs(), |x| {
                    self.evaluate_word(x)
                });
                let rhs = self.bundle.coact_block(&val, w);
                if lhs != rhs {
                    right_col = Err(tag());
                }
            }
            if left_col.is_ok() {
                let lhs = h
                    .coproduct_word(&hw)
                    .map_leg(0, &[h.algebra.clone()], |x| {
                        Tensor::from_poly(h.algebra.clone(), &h.antipode_word(x))
                    })
                    .map_leg(1, &self.value_legs(), |x| self.evaluate_word(x));
                let coacted = self.bundle.coact_block(&val, 0);
                // sigma moves the inserted structure leg to the front.
                let mut perm = vec![w];
                perm.extend(0..w);
                perm.extend(w + 1..coacted.num_legs());
                let rhs = coacted.permute_legs(&perm);
                if lhs != rhs {
                    left_col = Err(tag());
                }
            }
            if galois.is_ok() {
                let coacted = self.bundle.coact_block(&val, w);
                let prod = self.bundle.multiply_blocks(&coacted, 0);
                let mut expect = self.bundle.unit_block();
                let mut hleg = Tensor::zero(vec![h.algebra.clone()]);
                hleg.add_term(vec![hw.clone()], crate::ncalg::scalar::LaurentScalar::one());
                expect = expect.outer(&hleg);
                if prod != expect {
                    galois = Err(tag());
                }
            }
            if member.is_ok()
                && !(self.bundle.block_is_member(&val, 0) && self.bundle.block_is_member(&val, w))
            {
                member = Err(tag());
            }
        }

        let rec = |name: &str, law: &str, r: std::result::Result<(), String>| {
            CheckRecord::from_bool(format!("{prefix}.{name}"), law, r.is_ok(), || {
                format!("fails at {}", r.as_ref().err().cloned().unwrap_or_default())
            })
            .with_bounded_degree(d as u32)
        };
        let mut out = vec![CheckRecord::from_bool(
            format!("{prefix}.unit"),
            "l(1) = 1 (x) 1",
            unit_ok,
            || "l(1) != 1 (x) 1".to_string(),
        )];
        out.push(rec("mu_ell", "mu o l = eta o epsilon", mu_ell));
        out.push(rec(
            "right_colinear",
            "(l (x) id) Delta = (id (x) rho) l",
            right_col,
        ));
        out.push(rec(
            "left_colinear",
            "(S (x) l) Delta = (sigma (x) id)(rho (x) id) l",
            left_col,
        ));
        out.push(rec(
            "galois",
            "l^1(h) l^2(h)_(0) (x) l^2(h)_(1) = 1 (x) h",
            galois,
        ));
        if self.bundle.width() == 2 {
            out.push(rec(
                "cotensor_membership",
                "both halves of l(h) satisfy the cotensor condition",
                member,
            ));
        }
        out
    }

    pub fn verified(&self, d: usize) -> bool {
        self.verify(d, "conn").iter().all(|c| c.passed())
    }
}

/// The antipodal-bundle connection on `O(S^m_q)` over `O(Z_2)`:
/// `l(1) = 1 (x) 1`, `l(u) = sum_i z_i (x) z_i*`.
pub fn sphere_antipodal(co: Coaction) -> StrongConnection {
    let p = co.algebra.clone();
    let legs = vec![p.clone(), p.clone()];
    let n = p.num_gens();
    let bundle = Bundle::Plain(co);
    StrongConnection::new("antipodal", bundle, move |h| {
        if h.is_one() {
            return Tensor::unit(legs.clone());
        }
        let mut t = Tensor::zero(legs.clone());
        for i in 0..n {
            let g = Gen::new(i as u16);
            t.add_term(
                vec![Word::single(g), Word::single(p.star_gen(g))],
                crate::ncalg::scalar::LaurentScalar::one(),
            );
        }
        t
    })
}

/// `l = (j^{-1} (x) j) o Delta` for a cleaving block map `j` of the bundle.
pub fn from_cleaving(
    name: &str,
    bundle: Bundle,
    j: impl Fn(&Word) -> Tensor + Send + Sync + 'static,
    j_inv: impl Fn(&Word) -> Tensor + Send + Sync + 'static,
) -> StrongConnection {
    let hopf = bundle.hopf().clone();
    let a_legs = bundle.a_legs();
    StrongConnection::new(name, bundle, move |h| {
        hopf.coproduct_word(h)
            .map_leg(0, &a_legs, &j_inv)
            .map_leg(a_legs.len(), &a_legs, &j)
    })
}

/// Cor.-style connection over the quotient: `l(h) = f^{-1}(iota(h)_(1))
/// (x) f(iota(h)_(2))` for a section `iota` of `pi` and a convolution
/// invertible `f` out of the big Hopf algebra.
pub fn from_section(
    name: &str,
    co: Coaction,
    big: HopfAlgebra,
    f: crate::hopf::maps::HLinMap,
    f_inv: crate::hopf::maps::HLinMap,
    iota: crate::hopf::maps::HLinMap,
) -> StrongConnection {
    let a = co.algebra.clone();
    let bundle = Bundle::Plain(co);
    StrongConnection::new(name, bundle, move |h| {
        let lifted = iota.apply_word(h);
        big.coproduct(&lifted)
            .map_leg(0, &[a.clone()], |x| Tensor::from_poly(a.clone(), &f_inv.apply_word(x)))
            .map_leg(1, &[a.clone()], |x| Tensor::from_poly(a.clone(), &f.apply_word(x)))
    })
}

/// Prolongation of a strong connection along a Hopf surjection
/// `pi: H -> Hbar`:
/// `l(h) = l_bar^1(pi(h_(2))) (x) S(h_(1)) (x) l_bar^2(pi(h_(2))) (x) h_(3)`.
pub fn prolong(
    base: &StrongConnection,
    pi: crate::ncalg::morphism::AlgebraMorphism,
    cotensor: CotensorSpace,
) -> StrongConnection {
    let base = base.clone();
    let hopf = cotensor.lambda.hopf.clone();
    let h_leg = vec![hopf.algebra.clone()];
    let base_legs = base.value_legs();
    let bundle = Bundle::Prolonged(cotensor);
    StrongConnection::new("prolonged", bundle, move |h| {
        hopf.iterated_coproduct(&NCPoly::from_word(h.clone()), 3)
            .map_leg(0, &h_leg, |x| {
                Tensor::from_poly(h_leg[0].clone(), &hopf.antipode_word(x))
            })
            .map_leg(1, &base_legs, |x| base.evaluate(&pi.apply_word(x)))
            .permute_legs(&[1, 0, 2, 3])
    })
}

/// The cleft connection of a crossed-product bundle:
/// `l(h) = f^{-1}(h_(2)) (x) S(h_(1)) (x) f(h_(3)) (x) h_(4)`.
pub fn cleft_cotensor(
    f: crate::hopf::maps::HLinMap,
    f_inv: crate::hopf::maps::HLinMap,
    cotensor: CotensorSpace,
) -> StrongConnection {
    let hopf = cotensor.lambda.hopf.clone();
    let h_leg = vec![hopf.algebra.clone()];
    let a_leg = vec![cotensor.rho.algebra.clone()];
    let bundle = Bundle::Prolonged(cotensor);
    StrongConnection::new("cleft", bundle, move |h| {
        hopf.iterated_coproduct(&NCPoly::from_word(h.clone()), 4)
            .map_leg(0, &h_leg, |x| {
                Tensor::from_poly(h_leg[0].clone(), &hopf.antipode_word(x))
            })
            .map_leg(1, &a_leg, |x| {
                Tensor::from_poly(a_leg[0].clone(), &f_inv.apply_word(x))
            })
            .map_leg(2, &a_leg, |x| {
                Tensor::from_poly(a_leg[0].clone(), &f.apply_word(x))
            })
            .permute_legs(&[1, 0, 2, 3])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::maps;
    use crate::ncalg::catalog;
    use crate::ncalg::scalar::LaurentScalar;

    fn z2_sphere(m: usize) -> Coaction {
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        Coaction::graded_diagonal(Arc::new(catalog::sphere(m)), z2).unwrap()
    }

    #[test]
    fn antipodal_connections_pass_for_low_spheres() {
        for m in 1..=3 {
            let conn = sphere_antipodal(z2_sphere(m));
            for r in conn.verify(2, "t") {
                assert!(r.passed(), "m={} fails {}: {:?}", m, r.id, r.witness);
            }
        }
    }

    #[test]
    fn a_truncated_connection_fails_mu_and_galois() {
        let co = z2_sphere(2);
        let p = co.algebra.clone();
        let legs = vec![p.clone(), p.clone()];
        let bad = StrongConnection::new("bad", Bundle::Plain(co), move |h| {
            if h.is_one() {
                return Tensor::unit(legs.clone());
            }
            let mut t = Tensor::zero(legs.clone());
            t.add_term(
                vec![Word::single(Gen::new(0)), Word::single(Gen::starred(0))],
                LaurentScalar::one(),
            );
            t
        });
        let records = bad.verify(1, "t");
        let failed: Vec<&str> = records
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.id.as_str())
            .collect();
        assert!(failed.contains(&"t.mu_ell"));
        assert!(failed.contains(&"t.galois"));
    }

    #[test]
    fn identity_cleaving_of_su2_gives_the_regular_connection() {
        // j = id on O(SU_q(2)): l(h) = S(h_(1)) (x) h_(2).
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let co = Coaction::regular(su2.clone());
        let alg = su2.algebra.clone();
        let alg2 = su2.algebra.clone();
        let s = su2.clone();
        let conn = from_cleaving(
            "regular",
            Bundle::Plain(co),
            move |w| Tensor::from_poly(alg.clone(), &NCPoly::from_word(w.clone())),
            move |w| Tensor::from_poly(alg2.clone(), &s.antipode_word(w)),
        );
        // l(a) = a* (x) a + q^{-2} b (x) b*.
        let a = Gen::new(0);
        let b = Gen::new(1);
        let bs = Gen::starred(1);
        let as_ = Gen::starred(0);
        let v = conn.evaluate_word(&Word::single(a));
        assert_eq!(
            v.coeff(&[Word::single(as_), Word::single(a)]),
            LaurentScalar::one()
        );
        assert_eq!(
            v.coeff(&[Word::single(b), Word::single(bs)]),
            LaurentScalar::q_pow(-2)
        );
        for r in conn.verify(2, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn section_connection_differs_from_antipodal_but_passes() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let co = z2_sphere(2);
        let f = maps::HLinMap::from_morphism(su2.clone(), maps::f2()).unwrap();
        let f_inv = f.after_antipode();
        let iota = maps::iota_z2_su2().unwrap();
        let conn = from_section("sectional", co.clone(), su2, f, f_inv, iota);
        // l(u) = z_0* (x) z_0 + q^{-2} z_1 (x) z_1.
        let u = Word::single(Gen::new(0));
        let v = conn.evaluate_word(&u);
        let z0 = Gen::new(0);
        let z1 = Gen::new(1);
        assert_eq!(
            v.coeff(&[Word::single(Gen::starred(0)), Word::single(z0)]),
            LaurentScalar::one()
        );
        assert_eq!(
            v.coeff(&[Word::single(z1), Word::single(z1)]),
            LaurentScalar::q_pow(-2)
        );
        assert!(conn.verified(2));
        let antipodal = sphere_antipodal(co);
        assert_ne!(antipodal.evaluate_word(&u), v);
    }

    #[test]
    fn prolonged_connection_reproduces_the_worked_values() {
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let u1 = HopfAlgebra::bundled("u1").unwrap();
        let base = sphere_antipodal(z2_sphere(2));
        let lambda =
            crate::comod::LeftCoaction::via_projection(u1.clone(), z2, maps::pi2()).unwrap();
        let cot = CotensorSpace::new(z2_sphere(2), lambda).unwrap();
        let conn = prolong(&base, maps::pi2(), cot);

        let v = Gen::new(0);
        let vs = Gen::starred(0);
        let lv = conn.evaluate_word(&Word::single(v));
        // l(v) = sum_i z_i (x) v* (x) z_i* (x) v.
        assert_eq!(lv.num_terms(), 2);
        for i in 0..2u16 {
            let s2 = catalog::sphere(2);
            let zi = Gen::new(i);
            assert_eq!(
                lv.coeff(&[
                    Word::single(zi),
                    Word::single(vs),
                    Word::single(s2.star_gen(zi)),
                    Word::single(v)
                ]),
                LaurentScalar::one()
            );
        }
        // l(v^2) = 1 (x) v*^2 (x) 1 (x) v^2.
        let v2 = Word(vec![v, v]);
        let lv2 = conn.evaluate_word(&v2);
        assert_eq!(lv2.num_terms(), 1);
        assert_eq!(
            lv2.coeff(&[Word::one(), Word(vec![vs, vs]), Word::one(), v2.clone()]),
            LaurentScalar::one()
        );
        for r in conn.verify(2, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn cleft_cotensor_connection_matches_the_induced_cleaving() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let s2co = z2_sphere(2);
        let lambda =
            crate::comod::LeftCoaction::via_projection(su2.clone(), z2, maps::pi_su2_z2())
                .unwrap();
        let cot = CotensorSpace::new(s2co, lambda).unwrap();
        let f = maps::HLinMap::from_morphism(su2.clone(), maps::f2()).unwrap();
        let f_inv = f.after_antipode();
        let conn = cleft_cotensor(f.clone(), f_inv.clone(), cot.clone());
        for r in conn.verify(2, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
        // Agreement with the cleaving j(h) = f(h_(1)) (x) h_(2).
        let legs = cot.legs();
        let legs2 = legs.clone();
        let hopf = su2.clone();
        let hopf2 = su2.clone();
        let fc = f.clone();
        let fc2 = f.clone();
        let j = move |w: &Word| {
            hopf.coproduct_word(w).map_leg(0, &[legs[0].clone()], |x| {
                Tensor::from_poly(legs[0].clone(), &fc.apply_word(x))
            })
        };
        let j_inv = move |w: &Word| {
            let s = hopf2.antipode_word(w);
            let mut out = Tensor::zero(legs2.clone());
            for (sw, sc) in s.iter() {
                out += &hopf2
                    .coproduct_word(sw)
                    .map_leg(0, &[legs2[0].clone()], |x| {
                        Tensor::from_poly(legs2[0].clone(), &fc2.apply_word(x))
                    })
                    .scale(sc);
            }
            out
        };
        let cleaved = from_cleaving("induced", Bundle::Prolonged(cot), j, j_inv);
        for w in su2.algebra.basis_enumerate(2) {
            assert_eq!(
                conn.evaluate_word(&w),
                cleaved.evaluate_word(&w),
                "at {}",
                su2.algebra.fmt_word(&w)
            );
        }
    }
}
