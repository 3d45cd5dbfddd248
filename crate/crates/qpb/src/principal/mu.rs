//! The Miyashita–Ulbrich action of a strong connection and the embedding
//! `Psi` of the quotient-coinvariant subalgebra into the crossed product.

use crate::hopf::tensor::Tensor;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::Word;
use crate::principal::cleft::CrossedData;
use crate::principal::connection::{cleft_cotensor, StrongConnection};
use crate::report::CheckRecord;
use crate::{Error, Result};

pub struct MuContext {
    pub cd: CrossedData,
    /// The cleft connection of the prolonged bundle, driving the action.
    pub conn: StrongConnection,
}

impl MuContext {
    pub fn new(cd: CrossedData) -> Self {
        let conn = cleft_cotensor(cd.f.clone(), cd.f_inv.clone(), cd.cotensor.clone());
        Self { cd, conn }
    }

    /// `Psi(k) = f^{-1}(k_(1)) (x) k_(2)`; `k` must be left coinvariant
    /// under the quotient coaction.
    pub fn psi(&self, k: &NCPoly) -> Result<Tensor> {
        if !self.cd.cotensor.lambda.is_coinvariant(k) {
            return Err(Error::Unsupported(format!(
                "psi input {} is not left coinvariant",
                self.cd.hopf.algebra.fmt_poly(k)
            )));
        }
        let abar = self.cd.rho_hbar.algebra.clone();
        Ok(self.cd.hopf.coproduct(k).map_leg(0, &[abar.clone()], |x| {
            Tensor::from_poly(abar.clone(), &self.cd.f_inv.apply_word(x))
        }))
    }

    /// The Miyashita–Ulbrich action `x <| h = l^1(h) x l^2(h)` on the
    /// prolonged algebra (componentwise products in `Abar (x) H`).
    pub fn mu_action(&self, x: &Tensor, h: &NCPoly) -> Tensor {
        let legs = self.cd.legs();
        let mut out = Tensor::zero(legs.clone());
        let nf = self.cd.hopf.algebra.normal_form(h);
        for (hw, hc) in nf.iter() {
            let val = self.conn.evaluate_word(hw);
            for (ws, c) in val.terms() {
                let mut block1 = Tensor::zero(legs.clone());
                block1.add_term(vec![ws[0].clone(), ws[1].clone()], c * hc);
                let mut block2 = Tensor::zero(legs.clone());
                block2.add_term(vec![ws[2].clone(), ws[3].clone()], LaurentScalar::one());
                out += &block1.mul(x).mul(&block2);
            }
        }
        out
    }

    /// The adjoint action `k <| h = S(h_(1)) k h_(2)` inside `H`.
    pub fn adjoint(&self, k: &NCPoly, h: &NCPoly) -> NCPoly {
        let hopf = &self.cd.hopf;
        let mut out = NCPoly::zero();
        for (legs, c) in hopf.coproduct(h).terms() {
            let s = hopf.antipode_word(&legs[0]);
            let prod = hopf
                .algebra
                .multiply_all(&[&s, k, &NCPoly::from_word(legs[1].clone())]);
            out = &out + &prod.scale(c);
        }
        out
    }

    /// Embeds `1 (x) k` as a tensor in the prolonged algebra.
    pub fn one_tensor(&self, k: &NCPoly) -> Tensor {
        let nf = self.cd.hopf.algebra.normal_form(k);
        let mut out = Tensor::zero(self.cd.legs());
        for (w, c) in nf.iter() {
            out.add_term(vec![Word::one(), w.clone()], c.clone());
        }
        out
    }

    /// Properties of `Psi` on quotient-coinvariant basis words: the linear
    /// identities range over degree ≤ d, while the quadratic loops
    /// (multiplicativity, equivariance) range over degree ≤ d_pairs with
    /// action arguments of degree ≤ d_h.
    pub fn verify_psi(&self, d: usize, d_pairs: usize, d_h: usize, prefix: &str) -> Vec<CheckRecord> {
        let cd = &self.cd;
        let coinv = cd.cotensor.lambda.coinvariant_words(d);
        let pair_words = cd.cotensor.lambda.coinvariant_words(d_pairs);
        let mut out = Vec::new();

        let unit_ok = self
            .psi(&NCPoly::one())
            .map(|t| t == cd.crossed_unit())
            .unwrap_or(false);
        out.push(CheckRecord::from_bool(
            format!("{prefix}.unit"),
            "Psi(1) = 1 (x) 1",
            unit_ok,
            || "Psi(1) != 1 (x) 1".to_string(),
        ));

        let mut in_b = Ok(());
        let mut theta = Ok(());
        let mut colinear = Ok(());
        let h_leg = vec![cd.hopf.algebra.clone()];
        for kw in &coinv {
            let tag = || cd.hopf.algebra.fmt_word(kw);
            let k = NCPoly::from_word(kw.clone());
            let psi_k = self.psi(&k).expect("coinvariant by construction");
            if in_b.is_ok() && !cd.first_leg_in_b(&psi_k) {
                in_b = Err(tag());
            }
            if theta.is_ok() && cd.theta_inv(&psi_k) != self.one_tensor(&k) {
                theta = Err(tag());
            }
            if colinear.is_ok() {
                let lhs = psi_k.map_leg(1, &[h_leg[0].clone(), h_leg[0].clone()], |x| {
                    cd.hopf.coproduct_word(x)
                });
                let mut rhs = Tensor::zero(vec![
                    cd.rho_hbar.algebra.clone(),
                    cd.hopf.algebra.clone(),
                    cd.hopf.algebra.clone(),
                ]);
                for (legs, c) in cd.hopf.coproduct(&k).terms() {
                    let inner = self
                        .psi(&NCPoly::from_word(legs[0].clone()))
                        .expect("coproduct legs of coinvariants are coinvariant");
                    for (ws, wc) in inner.terms() {
                        rhs.add_term(vec![ws[0].clone(), ws[1].clone(), legs[1].clone()], c * wc);
                    }
                }
                if lhs != rhs {
                    colinear = Err(tag());
                }
            }
        }

        let mut multiplicative = Ok(());
        let mut equivariant = Ok(());
        let h_words = cd.hopf.algebra.basis_enumerate(d_h);
        for kw in &pair_words {
            let tag = || cd.hopf.algebra.fmt_word(kw);
            let k = NCPoly::from_word(kw.clone());
            let psi_k = self.psi(&k).expect("coinvariant by construction");
            if multiplicative.is_ok() {
                for kw2 in &pair_words {
                    let k2 = NCPoly::from_word(kw2.clone());
                    let lhs = self
                        .psi(&cd.hopf.algebra.multiply(&k, &k2))
                        .expect("products of coinvariants are coinvariant");
                    let rhs = cd.crossed_multiply(
                        &psi_k,
                        &self.psi(&k2).expect("coinvariant by construction"),
                    );
                    if lhs != rhs {
                        multiplicative =
                            Err(format!("{} , {}", tag(), cd.hopf.algebra.fmt_word(kw2)));
                        break;
                    }
                }
            }
            if equivariant.is_ok() {
                for hw in &h_words {
                    let h = NCPoly::from_word(hw.clone());
                    let lhs = self.mu_action(&self.one_tensor(&k), &h);
                    let adj = self.adjoint(&k, &h);
                    if !cd.cotensor.lambda.is_coinvariant(&adj) {
                        equivariant = Err(format!("adjoint leaves coinvariants at {}", tag()));
                        break;
                    }
                    if lhs != self.one_tensor(&adj) {
                        equivariant =
                            Err(format!("{} <| {}", tag(), cd.hopf.algebra.fmt_word(hw)));
                        break;
                    }
                }
            }
        }
        let rec = |name: &str, law: &str, deg: usize, r: std::result::Result<(), String>| {
            CheckRecord::from_bool(format!("{prefix}.{name}"), law, r.is_ok(), || {
                format!("fails at {}", r.as_ref().err().cloned().unwrap_or_default())
            })
            .with_bounded_degree(deg as u32)
        };
        out.push(rec(
            "lands_in_b",
            "Psi(k) has coinvariant first legs",
            d,
            in_b,
        ));
        out.push(rec("theta_inverse", "theta^{-1}(Psi(k)) = 1 (x) k", d, theta));
        out.push(rec(
            "colinear",
            "(id (x) Delta) Psi(k) = Psi(k_(1)) (x) k_(2)",
            d,
            colinear,
        ));
        out.push(rec(
            "multiplicative",
            "Psi(k k') = Psi(k) Psi(k') in the crossed product",
            d_pairs,
            multiplicative,
        ));
        out.push(rec(
            "mu_equivariant",
            "(1 (x) k) <| h = 1 (x) S(h_(1)) k h_(2)",
            d_pairs,
            equivariant,
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::scalar::LaurentScalar;
    use crate::ncalg::word::Gen;

    fn ctx() -> MuContext {
        MuContext::new(CrossedData::sphere_example().unwrap())
    }

    #[test]
    fn psi_rejects_non_coinvariant_input() {
        let c = ctx();
        let a = NCPoly::from_gen(Gen::new(0));
        assert!(c.psi(&a).is_err());
        assert!(c.psi(&NCPoly::one()).is_ok());
    }

    #[test]
    fn psi_of_a_squared_has_even_first_legs() {
        let c = ctx();
        let a2 = NCPoly::from_word(Word(vec![Gen::new(0); 2]));
        let t = c.psi(&a2).unwrap();
        assert!(c.cd.first_leg_in_b(&t));
        assert!(!t.is_zero());
    }

    #[test]
    fn psi_of_bbstar_centralizes_the_base() {
        let c = ctx();
        let bbs = NCPoly::from_word(Word(vec![Gen::new(1), Gen::starred(1)]));
        let psi = c.psi(&bbs).unwrap();
        let (p, r, t) = crate::comod::rp2_generator_images();
        for base in [p, r, t] {
            let mut embedded = Tensor::zero(c.cd.legs());
            for (w, coeff) in base.iter() {
                embedded.add_term(vec![w.clone(), Word::one()], coeff.clone());
            }
            let left = c.cd.crossed_multiply(&psi, &embedded);
            let right = c.cd.crossed_multiply(&embedded, &psi);
            assert_eq!(left, right);
        }
    }

    #[test]
    fn psi_properties_hold_at_low_degree() {
        let c = ctx();
        for r in c.verify_psi(2, 2, 1, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn mu_action_by_the_unit_is_trivial() {
        let c = ctx();
        let mut x = Tensor::zero(c.cd.legs());
        x.add_term(
            vec![Word::single(Gen::new(0)), Word::single(Gen::new(0))],
            LaurentScalar::one(),
        );
        assert_eq!(c.mu_action(&x, &NCPoly::one()), x);
    }
}
