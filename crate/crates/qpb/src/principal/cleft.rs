//! Cleft structure of prolonged bundles: the trivializing map θ, the
//! inverse-side colinearity identity, and the crossed-product algebra on
//! the coinvariants.

use rand::Rng;

use crate::comod::{Coaction, CotensorSpace, LeftCoaction};
use crate::hopf::maps::{is_convolution_inverse, HLinMap};
use crate::hopf::structure::HopfAlgebra;
use crate::hopf::tensor::Tensor;
use crate::ncalg::morphism::AlgebraMorphism;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::scalar::LaurentScalar;
use crate::report::CheckRecord;
use crate::Result;

/// Everything needed to trivialize `Abar box_{Hbar} H` over the
/// coinvariants: the quotient data and a cleaving pair `f`, `f^{-1}`.
#[derive(Clone)]
pub struct CrossedData {
    pub hopf: HopfAlgebra,
    pub hbar: HopfAlgebra,
    pub pi: AlgebraMorphism,
    pub f: HLinMap,
    pub f_inv: HLinMap,
    pub rho_hbar: Coaction,
    pub cotensor: CotensorSpace,
}

impl CrossedData {
    pub fn new(
        hopf: HopfAlgebra,
        hbar: HopfAlgebra,
        pi: AlgebraMorphism,
        f: HLinMap,
        f_inv: HLinMap,
        rho_hbar: Coaction,
    ) -> Result<Self> {
        let lambda = LeftCoaction::via_projection(hopf.clone(), hbar.clone(), pi.clone())?;
        let cotensor = CotensorSpace::new(rho_hbar.clone(), lambda)?;
        Ok(Self {
            hopf,
            hbar,
            pi,
            f,
            f_inv,
            rho_hbar,
            cotensor,
        })
    }

    /// The bundled example: `H = O(SU_q(2))`, `Hbar = O(Z_2)`,
    /// `Abar = O(S^2_q)`, `f = f_2`.
    pub fn sphere_example() -> Result<Self> {
        let su2 = HopfAlgebra::bundled("su2")?;
        let z2 = HopfAlgebra::bundled("z2")?;
        let f = HLinMap::from_morphism(su2.clone(), crate::hopf::maps::f2())?;
        let f_inv = f.after_antipode();
        let rho = Coaction::graded_diagonal(
            std::sync::Arc::new(crate::ncalg::catalog::sphere(2)),
            z2.clone(),
        )?;
        Self::new(su2, z2, crate::hopf::maps::pi_su2_z2(), f, f_inv, rho)
    }

    fn abar(&self) -> std::sync::Arc<crate::ncalg::presentation::Presentation> {
        self.rho_hbar.algebra.clone()
    }

    pub fn legs(&self) -> Vec<std::sync::Arc<crate::ncalg::presentation::Presentation>> {
        self.cotensor.legs()
    }

    /// Unital + convolution invertible + right `Hbar`-colinear + the
    /// inverse-side colinearity identity, on the degree-`d` basis of `H`.
    pub fn verify_cleaving(&self, d: usize, prefix: &str) -> Vec<CheckRecord> {
        let mut out = Vec::new();
        out.push(CheckRecord::from_bool(
            format!("{prefix}.unital"),
            "f(1) = 1",
            self.f.is_unital(),
            || "f(1) != 1".to_string(),
        ));
        out.push(
            CheckRecord::from_bool(
                format!("{prefix}.convolution_inverse"),
                "f(h_(1)) f^{-1}(h_(2)) = epsilon(h) 1 = f^{-1}(h_(1)) f(h_(2))",
                is_convolution_inverse(&self.f, &self.f_inv, d),
                || "convolution inverse fails".to_string(),
            )
            .with_bounded_degree(d as u32),
        );
        let abar_leg = vec![self.abar()];
        let hbar_leg = vec![self.hbar.algebra.clone()];
        let mut colinear = Ok(());
        let mut invcov = Ok(());
        for h in self.hopf.algebra.basis_enumerate(d) {
            let tag = || self.hopf.algebra.fmt_word(&h);
            let dh = self.hopf.coproduct_word(&h);
            if colinear.is_ok() {
                let lhs = self.rho_hbar.apply(&self.f.apply_word(&h));
                let rhs = dh
                    .map_leg(0, &abar_leg, |x| {
                        Tensor::from_poly(abar_leg[0].clone(), &self.f.apply_word(x))
                    })
                    .map_leg(1, &hbar_leg, |x| {
                        Tensor::from_poly(hbar_leg[0].clone(), &self.pi.apply_word(x))
                    });
                if lhs != rhs {
                    colinear = Err(tag());
                }
            }
            if invcov.is_ok() {
                let lhs = dh
                    .map_leg(0, &hbar_leg, |x| {
                        Tensor::from_poly(
                            hbar_leg[0].clone(),
                            &self.hbar.antipode(&self.pi.apply_word(x)),
                        )
                    })
                    .map_leg(1, &abar_leg, |x| {
                        Tensor::from_poly(abar_leg[0].clone(), &self.f_inv.apply_word(x))
                    })
                    .permute_legs(&[1, 0]);
                let rhs = self.rho_hbar.apply(&self.f_inv.apply_word(&h));
                if lhs != rhs {
                    invcov = Err(tag());
                }
            }
        }
        let rec = |name: &str, law: &str, r: std::result::Result<(), String>| {
            CheckRecord::from_bool(format!("{prefix}.{name}"), law, r.is_ok(), || {
                format!("fails at {}", r.as_ref().err().cloned().unwrap_or_default())
            })
            .with_bounded_degree(d as u32)
        };
        out.push(rec(
            "colinear",
            "rho(f(h)) = f(h_(1)) (x) pi(h_(2))",
            colinear,
        ));
        out.push(rec(
            "inverse_colinear",
            "f^{-1}(h_(2)) (x) S(pi(h_(1))) = f^{-1}(h)_(0) (x) f^{-1}(h)_(1)",
            invcov,
        ));
        out
    }

    /// `theta(a (x) h) = a f^{-1}(h_(1)) (x) h_(2)`.
    pub fn theta(&self, t: &Tensor) -> Tensor {
        let abar = self.abar();
        let h_leg = self.hopf.algebra.clone();
        t.map_leg(1, &[abar.clone(), h_leg], |h| {
            self.hopf.coproduct_word(h).map_leg(0, &[abar.clone()], |x| {
                Tensor::from_poly(abar.clone(), &self.f_inv.apply_word(x))
            })
        })
        .merge_legs(0)
    }

    /// `theta^{-1}(b (x) h) = b f(h_(1)) (x) h_(2)`.
    pub fn theta_inv(&self, t: &Tensor) -> Tensor {
        let abar = self.abar();
        let h_leg = self.hopf.algebra.clone();
        t.map_leg(1, &[abar.clone(), h_leg], |h| {
            self.hopf.coproduct_word(h).map_leg(0, &[abar.clone()], |x| {
                Tensor::from_poly(abar.clone(), &self.f.apply_word(x))
            })
        })
        .merge_legs(0)
    }

    /// Every `Abar`-component (grouped by the structure leg) is coinvariant.
    pub fn first_leg_in_b(&self, t: &Tensor) -> bool {
        t.group_by_tail(1)
            .values()
            .all(|block| self.rho_hbar.is_coinvariant(&block.as_poly()))
    }

    pub fn crossed_unit(&self) -> Tensor {
        Tensor::unit(self.legs())
    }

    /// `(b (x) h)(c (x) g) = b f(h_(1)) c f(g_(1)) f^{-1}(h_(2) g_(2))
    ///  (x) h_(3) g_(3)`.
    pub fn crossed_multiply(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let abar = self.abar();
        let mut out = Tensor::zero(self.legs());
        for (xw, xc) in x.terms() {
            for (yw, yc) in y.terms() {
                let (b, h) = (&xw[0], &xw[1]);
                let (c, g) = (&yw[0], &yw[1]);
                let dh = self.hopf.iterated_coproduct(&NCPoly::from_word(h.clone()), 3);
                let dg = self.hopf.iterated_coproduct(&NCPoly::from_word(g.clone()), 3);
                for (hs, hc) in dh.terms() {
                    for (gs, gc) in dg.terms() {
                        let h2g2 = hs[1].concat(&gs[1]);
                        let first = abar.multiply_all(&[
                            &NCPoly::from_word(b.clone()),
                            &self.f.apply_word(&hs[0]),
                            &NCPoly::from_word(c.clone()),
                            &self.f.apply_word(&gs[0]),
                            &self.f_inv.apply(&NCPoly::from_word(h2g2)),
                        ]);
                        let second = hs[2].concat(&gs[2]);
                        let coeff = &(xc * yc) * &(hc * gc);
                        for (fw, fc) in first.iter() {
                            out.add_term(vec![fw.clone(), second.clone()], &coeff * fc);
                        }
                    }
                }
            }
        }
        out
    }

    /// A reproducible element of `B (x) H`: a combination of coinvariant
    /// words tensored with basis words of `H`.
    pub fn random_crossed_element(
        &self,
        rng: &mut impl Rng,
        d_b: usize,
        d_h: usize,
        terms: usize,
    ) -> Tensor {
        let b_words = self.rho_hbar.coinvariant_words(d_b);
        let h_words = self.hopf.algebra.basis_enumerate(d_h);
        let mut out = Tensor::zero(self.legs());
        for _ in 0..terms {
            let b = b_words[rng.gen_range(0..b_words.len())].clone();
            let h = h_words[rng.gen_range(0..h_words.len())].clone();
            let num = rng.gen_range(-3i64..=3);
            let qp = rng.gen_range(-2i64..=2);
            if num == 0 {
                continue;
            }
            out.add_term(
                vec![b, h],
                LaurentScalar::term(
                    qp,
                    num_rational::BigRational::from_integer(num.into()),
                ),
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::ncalg::word::{Gen, Word};

    #[test]
    fn cleaving_checks_pass_for_the_sphere_example() {
        let cd = CrossedData::sphere_example().unwrap();
        for r in cd.verify_cleaving(2, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn invcov_on_the_generator_matches_the_worked_value() {
        // f_2^{-1}(a_(2)) (x) S(pi(a_(1))) = z_0* (x) u = rho(z_0*).
        let cd = CrossedData::sphere_example().unwrap();
        let a = Word::single(Gen::new(0));
        let lhs = cd
            .hopf
            .coproduct_word(&a)
            .map_leg(0, &[cd.hbar.algebra.clone()], |x| {
                Tensor::from_poly(
                    cd.hbar.algebra.clone(),
                    &cd.hbar.antipode(&cd.pi.apply_word(x)),
                )
            })
            .map_leg(1, &[cd.rho_hbar.algebra.clone()], |x| {
                Tensor::from_poly(cd.rho_hbar.algebra.clone(), &cd.f_inv.apply_word(x))
            })
            .permute_legs(&[1, 0]);
        let rhs = cd.rho_hbar.apply(&NCPoly::from_gen(Gen::starred(0)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 1);
    }

    #[test]
    fn theta_lands_in_b_and_round_trips() {
        let cd = CrossedData::sphere_example().unwrap();
        // theta(z_0 (x) a) has coinvariant first legs.
        let mut x = Tensor::zero(cd.legs());
        x.add_term(
            vec![Word::single(Gen::new(0)), Word::single(Gen::new(0))],
            LaurentScalar::one(),
        );
        assert!(cd.cotensor.contains(&x));
        let tx = cd.theta(&x);
        assert!(cd.first_leg_in_b(&tx));
        assert_eq!(cd.theta_inv(&tx), x);

        // Unit case.
        let unit = cd.crossed_unit();
        assert_eq!(cd.theta(&unit), unit);

        // Round trips over the cotensor basis and both composites.
        for (wa, wh) in cd.cotensor.basis(2, 2).unwrap() {
            let mut t = Tensor::zero(cd.legs());
            t.add_term(vec![wa, wh], LaurentScalar::one());
            let th = cd.theta(&t);
            assert!(cd.first_leg_in_b(&th));
            assert_eq!(cd.theta_inv(&th), t);
            assert_eq!(cd.theta(&cd.theta_inv(&t)), t);
        }
    }

    #[test]
    fn crossed_product_is_unital_and_associative() {
        let cd = CrossedData::sphere_example().unwrap();
        let unit = cd.crossed_unit();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..6 {
            let x = cd.random_crossed_element(&mut rng, 2, 1, 2);
            let y = cd.random_crossed_element(&mut rng, 2, 1, 2);
            let z = cd.random_crossed_element(&mut rng, 2, 1, 2);
            assert_eq!(cd.crossed_multiply(&unit, &x), x);
            assert_eq!(cd.crossed_multiply(&x, &unit), x);
            let left = cd.crossed_multiply(&cd.crossed_multiply(&x, &y), &z);
            let right = cd.crossed_multiply(&x, &cd.crossed_multiply(&y, &z));
            assert_eq!(left, right);
        }
    }
}
