//! The isomorphism `Phi` from the prolonged even-sphere algebra onto the
//! cotensor `O(S^{2n}_q) □_{O(Z_2)} O(U(1))`: `zeta_i -> z_i (x) v`,
//! `xi -> 1 (x) v*^2`, verified to be a star-algebra map and bijective on
//! basis words of bounded bidegree.

use std::sync::Arc;

use crate::comod::{sphere_cotensor, CotensorSpace};
use crate::hopf::maps;
use crate::hopf::structure::HopfAlgebra;
use crate::hopf::tensor::Tensor;
use crate::ncalg::catalog;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::{Gen, Word};
use crate::report::CheckRecord;
use crate::Result;

pub struct PhiMap {
    pub n: usize,
    pub source: Arc<Presentation>,
    pub cotensor: CotensorSpace,
}

impl PhiMap {
    pub fn new(n: usize) -> Result<Self> {
        let u1 = HopfAlgebra::bundled("u1")?;
        Ok(Self {
            n,
            source: Arc::new(catalog::prolong(n)),
            cotensor: sphere_cotensor(2 * n, u1, maps::pi2())?,
        })
    }

    fn sphere(&self) -> &Arc<Presentation> {
        &self.cotensor.rho.algebra
    }

    /// `zeta_i -> z_i (x) v`, `zeta_i* -> z_i* (x) v*`, `xi -> 1 (x) v*^2`.
    fn letter_image(&self, g: Gen) -> (Vec<Gen>, Vec<Gen>) {
        let v = Gen::new(0);
        if g.index as usize == self.n + 1 {
            let vg = if g.star { v } else { Gen::starred(0) };
            (vec![], vec![vg, vg])
        } else {
            let z = if g.star {
                self.sphere().star_gen(Gen::new(g.index))
            } else {
                Gen::new(g.index)
            };
            let vg = if g.star { Gen::starred(0) } else { v };
            (vec![z], vec![vg])
        }
    }

    /// Image of a raw word; the result is normalised legwise in the target.
    pub fn phi_word(&self, w: &Word) -> Tensor {
        let mut zw = Vec::new();
        let mut vw = Vec::new();
        for &g in &w.0 {
            let (z, v) = self.letter_image(g);
            zw.extend(z);
            vw.extend(v);
        }
        let mut t = Tensor::zero(self.cotensor.legs());
        t.add_term(vec![Word(zw), Word(vw)], LaurentScalar::one());
        t
    }

    /// Linear extension over the terms of `p` (no source normalisation, so
    /// that relation checks compare honest raw images).
    pub fn phi(&self, p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero(self.cotensor.legs());
        for (w, c) in p.iter() {
            out += &self.phi_word(w).scale(c);
        }
        out
    }

    /// The explicit preimage of a cotensor basis pair `(w_z, v^k)`:
    /// replace each sphere letter by its zeta counterpart and append the
    /// `xi` power that restores the circle charge.
    pub fn preimage(&self, w_z: &Word, w_v: &Word) -> Word {
        let k = self.cotensor.lambda.hopf.algebra.signed_degree(w_v);
        let mut gens: Vec<Gen> = w_z.0.clone();
        let s: i64 = gens.iter().map(|g| if g.star { -1 } else { 1 }).sum();
        debug_assert_eq!((s - k).rem_euclid(2), 0);
        let m = (s - k) / 2;
        let xi = if m >= 0 {
            Gen::new((self.n + 1) as u16)
        } else {
            Gen::starred((self.n + 1) as u16)
        };
        gens.extend(std::iter::repeat(xi).take(m.unsigned_abs() as usize));
        Word(gens)
    }

    /// Source basis words whose images land in bidegree ≤ (d_a, d_h):
    /// zeta-length ≤ d_a and circle charge of absolute value ≤ d_h.
    pub fn source_words(&self, d_a: usize, d_h: usize) -> Vec<Word> {
        let xi_idx = (self.n + 1) as u16;
        let depth = d_a + (d_a + d_h).div_ceil(2);
        self.source
            .basis_enumerate(depth)
            .into_iter()
            .filter(|w| {
                let zeta_len = w.0.iter().filter(|g| g.index != xi_idx).count();
                zeta_len <= d_a && self.source.signed_degree(w).unsigned_abs() as usize <= d_h
            })
            .collect()
    }

    pub fn verify(&self, d_a: usize, d_h: usize, prefix: &str) -> Vec<CheckRecord> {
        let mut out = Vec::new();
        let n = self.n;

        let mut relations = Ok(());
        for r in &self.source.rules {
            let lhs = self.phi_word(&r.lhs);
            let rhs = self.phi(&NCPoly::from_terms(
                r.rhs.iter().map(|(w, c)| (w.clone(), c.clone())),
            ));
            if lhs != rhs {
                relations = Err(self.source.fmt_word(&r.lhs));
                break;
            }
        }
        out.push(
            CheckRecord::from_bool(
                format!("{prefix}.relations"),
                "Phi maps every defining relation to zero",
                relations.is_ok(),
                || format!("fails on {}", relations.as_ref().err().cloned().unwrap_or_default()),
            ),
        );

        let words = self.source_words(d_a, d_h);
        let mut star_ok = Ok(());
        for w in &words {
            let lhs = self.phi(&self.source.star(&NCPoly::from_word(w.clone())));
            let rhs = self.tensor_star(&self.phi_word(w));
            if lhs != rhs {
                star_ok = Err(self.source.fmt_word(w));
                break;
            }
        }
        out.push(
            CheckRecord::from_bool(
                format!("{prefix}.star"),
                "Phi(x*) = Phi(x)* legwise",
                star_ok.is_ok(),
                || format!("fails on {}", star_ok.as_ref().err().cloned().unwrap_or_default()),
            )
            .with_bounded_degree(d_a as u32),
        );

        // Bijectivity onto the cotensor basis at bidegree ≤ (d_a, d_h):
        // distinct basis words map to distinct single monomials, and every
        // cotensor basis pair is hit by an explicit normal preimage.
        let mut images = std::collections::BTreeSet::new();
        let mut shape = Ok(());
        for w in &words {
            let t = self.phi_word(w);
            let single = t.num_terms() == 1 && t.terms().all(|(_, c)| c.is_one());
            if !single {
                shape = Err(format!("image of {} is not monomial", self.source.fmt_word(w)));
                break;
            }
            let key = t.terms().next().map(|(ws, _)| ws.clone()).unwrap();
            if !images.insert(key) {
                shape = Err(format!("image collision at {}", self.source.fmt_word(w)));
                break;
            }
        }
        let basis = self.cotensor.basis(d_a, d_h);
        let mut onto = match (&shape, &basis) {
            (Err(e), _) => Err(e.clone()),
            (_, Err(e)) => Err(e.to_string()),
            (Ok(()), Ok(pairs)) => {
                if pairs.len() != words.len() {
                    Err(format!(
                        "dimension mismatch: {} source words vs {} cotensor pairs",
                        words.len(),
                        pairs.len()
                    ))
                } else {
                    Ok(pairs.clone())
                }
            }
        };
        if let Ok(pairs) = &onto {
            for (wz, wv) in pairs {
                let pre = self.preimage(wz, wv);
                let nf = self.source.normal_form_word(&pre);
                let is_basis = nf.as_term().map(|(w, c)| *w == pre && c.is_one()) == Some(true);
                let mut expect = Tensor::zero(self.cotensor.legs());
                expect.add_term(vec![wz.clone(), wv.clone()], LaurentScalar::one());
                if !is_basis || self.phi_word(&pre) != expect {
                    onto = Err(format!(
                        "no normal preimage for {} (x) {}",
                        self.sphere().fmt_word(wz),
                        self.cotensor.lambda.hopf.algebra.fmt_word(wv)
                    ));
                    break;
                }
            }
        }
        out.push(
            CheckRecord::from_bool(
                format!("{prefix}.full_rank"),
                "Phi is bijective between basis words and cotensor pairs at bounded bidegree",
                onto.is_ok(),
                || onto.as_ref().err().cloned().unwrap_or_default(),
            )
            .with_bounded_degree(d_a.max(d_h) as u32)
            .with_witness(format!(
                "n = {n}, bidegree <= ({d_a}, {d_h}), {} basis words",
                words.len()
            )),
        );

        // The eliminated starred top letter: zeta_n* and zeta_n xi share
        // the image z_n (x) v*.
        let zn_star = Word::single(Gen::starred(n as u16));
        let zn_xi = Word(vec![Gen::new(n as u16), Gen::new((n + 1) as u16)]);
        let mut expect = Tensor::zero(self.cotensor.legs());
        expect.add_term(
            vec![Word::single(Gen::new(n as u16)), Word::single(Gen::starred(0))],
            LaurentScalar::one(),
        );
        let elim_ok = self.phi_word(&zn_star) == expect && self.phi_word(&zn_xi) == expect;
        out.push(CheckRecord::from_bool(
            format!("{prefix}.star_elimination"),
            "Phi(zeta_n*) = z_n (x) v* = Phi(zeta_n xi)",
            elim_ok,
            || "the two images disagree".to_string(),
        ));

        out
    }

    fn tensor_star(&self, t: &Tensor) -> Tensor {
        let legs = self.cotensor.legs();
        let mut out = Tensor::zero(legs.clone());
        for (ws, c) in t.terms() {
            out.add_term(
                vec![legs[0].star_word(&ws[0]), legs[1].star_word(&ws[1])],
                c.clone(),
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_on_products_matches_normalisation() {
        let phi = PhiMap::new(1).unwrap();
        // zeta_1 zeta_0 = q^{-1} zeta_0 zeta_1, and the images agree.
        let raw = Word(vec![Gen::new(1), Gen::new(0)]);
        let via_raw = phi.phi_word(&raw);
        let via_nf = phi.phi(&phi.source.normal_form_word(&raw));
        assert_eq!(via_raw, via_nf);
        assert_eq!(via_raw.num_terms(), 1);
    }

    #[test]
    fn star_elimination_example() {
        let phi = PhiMap::new(1).unwrap();
        let lhs = phi.phi_word(&Word::single(Gen::starred(1)));
        let rhs = phi.phi_word(&Word(vec![Gen::new(1), Gen::new(2)]));
        assert_eq!(lhs, rhs);
        let key = vec![Word::single(Gen::new(1)), Word::single(Gen::starred(0))];
        assert!(lhs.coeff(&key).is_one());
    }

    #[test]
    fn phi_checks_pass_for_n1_at_full_width() {
        let phi = PhiMap::new(1).unwrap();
        for r in phi.verify(4, 4, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn phi_checks_pass_for_n2_at_low_width() {
        let phi = PhiMap::new(2).unwrap();
        for r in phi.verify(2, 2, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn preimage_restores_charge_with_xi_powers() {
        let phi = PhiMap::new(1).unwrap();
        // z_1 (x) v*^3: zeta part has charge +1, so xi^2 is appended.
        let wz = Word::single(Gen::new(1));
        let wv = Word(vec![Gen::starred(0); 3]);
        let pre = phi.preimage(&wz, &wv);
        assert_eq!(pre.0, vec![Gen::new(1), Gen::new(2), Gen::new(2)]);
    }
}
