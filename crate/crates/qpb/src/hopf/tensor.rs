//! Tensor products of presented algebras with leg-wise normal forms.
//!
//! A `Tensor` is a finite sum of scalar-weighted tuples of normal words,
//! one word per leg.  All Sweedler-style sums are materialized through this
//! type; structure maps act leg by leg via `map_leg`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::Word;

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    legs: Vec<Arc<Presentation>>,
    terms: BTreeMap<Vec<Word>, LaurentScalar>,
}

impl Tensor {
    pub fn zero(legs: Vec<Arc<Presentation>>) -> Self {
        Self {
            legs,
            terms: BTreeMap::new(),
        }
    }

    /// `1 (x) ... (x) 1`.
    pub fn unit(legs: Vec<Arc<Presentation>>) -> Self {
        let mut t = Self::zero(legs);
        let ones = vec![Word::one(); t.legs.len()];
        t.terms.insert(ones, LaurentScalar::one());
        t
    }

    pub fn legs(&self) -> &[Arc<Presentation>] {
        &self.legs
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, words: &[Word]) -> LaurentScalar {
        self.terms.get(words).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    /// Adds `c * (words[0] (x) ... )`, normalizing each leg and expanding
    /// the resulting product of sums.
    pub fn add_term(&mut self, words: Vec<Word>, c: LaurentScalar) {
        assert_eq!(words.len(), self.legs.len(), "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        let mut acc: Vec<(Vec<Word>, LaurentScalar)> = vec![(Vec::new(), c)];
        for (i, w) in words.into_iter().enumerate() {
            let nf = self.legs[i].normal_form_word(&w);
            let mut next = Vec::with_capacity(acc.len() * nf.num_terms().max(1));
            for (prefix, pc) in &acc {
                for (nw, nc) in nf.iter() {
                    let mut ws = prefix.clone();
                    ws.push(nw.clone());
                    next.push((ws, pc * nc));
                }
            }
            acc = next;
            if acc.is_empty() {
                return;
            }
        }
        for (ws, c) in acc {
            let entry = self.terms.entry(ws.clone()).or_insert_with(LaurentScalar::zero);
            *entry += &c;
            if entry.is_zero() {
                self.terms.remove(&ws);
            }
        }
    }

    /// Outer product of single-leg polynomials.
    pub fn from_polys(legs: Vec<Arc<Presentation>>, polys: &[&NCPoly]) -> Self {
        assert_eq!(polys.len(), legs.len());
        let mut t = Self::zero(legs);
        let mut acc: Vec<(Vec<Word>, LaurentScalar)> = vec![(Vec::new(), LaurentScalar::one())];
        for p in polys {
            let mut next = Vec::new();
            for (prefix, pc) in &acc {
                for (w, c) in p.iter() {
                    let mut ws = prefix.clone();
                    ws.push(w.clone());
                    next.push((ws, pc * c));
                }
            }
            acc = next;
        }
        for (ws, c) in acc {
            t.add_term(ws, c);
        }
        t
    }

    pub fn from_poly(leg: Arc<Presentation>, p: &NCPoly) -> Self {
        Self::from_polys(vec![leg], &[p])
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.legs.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Replaces leg `i` by the legs of `f`'s output; `f` receives each
    /// normal word of leg `i` and must return tensors over `repl`.
    pub fn map_leg(
        &self,
        i: usize,
        repl: &[Arc<Presentation>],
        f: impl Fn(&Word) -> Tensor,
    ) -> Tensor {
        let mut legs = Vec::with_capacity(self.legs.len() - 1 + repl.len());
        legs.extend_from_slice(&self.legs[..i]);
        legs.extend_from_slice(repl);
        legs.extend_from_slice(&self.legs[i + 1..]);
        let mut out = Tensor::zero(legs);
        for (ws, c) in &self.terms {
            let image = f(&ws[i]);
            debug_assert_eq!(image.legs.len(), repl.len());
            for (iws, ic) in &image.terms {
                let mut words = Vec::with_capacity(out.legs.len());
                words.extend_from_slice(&ws[..i]);
                words.extend_from_slice(iws);
                words.extend_from_slice(&ws[i + 1..]);
                out.add_term(words, c * ic);
            }
        }
        out
    }

    /// Multiplies legs `i` and `i+1` (same presentation) into one leg.
    pub fn merge_legs(&self, i: usize) -> Tensor {
        assert!(i + 1 < self.legs.len());
        assert_eq!(self.legs[i].id, self.legs[i + 1].id, "merging unlike legs");
        let mut legs = self.legs.clone();
        legs.remove(i + 1);
        let mut out = Tensor::zero(legs);
        for (ws, c) in &self.terms {
            let mut words = ws.clone();
            let right = words.remove(i + 1);
            words[i] = words[i].concat(&right);
            out.add_term(words, c.clone());
        }
        out
    }

    /// Reorders legs: output leg `k` is input leg `perm[k]`.
    pub fn permute_legs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.legs.len());
        let legs = perm.iter().map(|&k| self.legs[k].clone()).collect();
        let mut out = Tensor::zero(legs);
        for (ws, c) in &self.terms {
            let words = perm.iter().map(|&k| ws[k].clone()).collect();
            out.add_term(words, c.clone());
        }
        out
    }

    /// Component-wise product: both factors live over the same legs.
    pub fn mul(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.legs.len(), other.legs.len(), "tensor rank mismatch");
        let mut out = Tensor::zero(self.legs.clone());
        for (aw, ac) in &self.terms {
            for (bw, bc) in &other.terms {
                let words = aw.iter().zip(bw.iter()).map(|(x, y)| x.concat(y)).collect();
                out.add_term(words, ac * bc);
            }
        }
        out
    }

    /// Concatenation product `self (x) other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut legs = self.legs.clone();
        legs.extend_from_slice(&other.legs);
        let mut out = Tensor::zero(legs);
        for (aw, ac) in &self.terms {
            for (bw, bc) in &other.terms {
                let mut words = aw.clone();
                words.extend_from_slice(bw);
                out.add_term(words, ac * bc);
            }
        }
        out
    }

    /// The unique leg as a polynomial (rank-1 only).
    pub fn as_poly(&self) -> NCPoly {
        assert_eq!(self.legs.len(), 1, "as_poly needs a rank-1 tensor");
        let mut p = NCPoly::zero();
        for (ws, c) in &self.terms {
            p.add_term(ws[0].clone(), c.clone());
        }
        p
    }

    /// Splits off the first `k` legs of every term: used to group
    /// `b (x) h`-style elements by their trailing legs.
    pub fn group_by_tail(&self, k: usize) -> BTreeMap<Vec<Word>, Tensor> {
        let mut out: BTreeMap<Vec<Word>, Tensor> = BTreeMap::new();
        for (ws, c) in &self.terms {
            let tail = ws[k..].to_vec();
            let entry = out
                .entry(tail)
                .or_insert_with(|| Tensor::zero(self.legs[..k].to_vec()));
            entry.add_term(ws[..k].to_vec(), c.clone());
        }
        out
    }

    pub fn fmt(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (ws, c) in &self.terms {
            let legs: Vec<String> = ws
                .iter()
                .enumerate()
                .map(|(i, w)| self.legs[i].fmt_word(w))
                .collect();
            parts.push(format!("({}) {}", c, legs.join(" (x) ")));
        }
        parts.join(" + ")
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, rhs: &Tensor) {
        assert_eq!(self.legs.len(), rhs.legs.len(), "tensor rank mismatch");
        for (ws, c) in &rhs.terms {
            let entry = self.terms.entry(ws.clone()).or_insert_with(LaurentScalar::zero);
            *entry += c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

impl SubAssign<&Tensor> for Tensor {
    fn sub_assign(&mut self, rhs: &Tensor) {
        assert_eq!(self.legs.len(), rhs.legs.len(), "tensor rank mismatch");
        for (ws, c) in &rhs.terms {
            let entry = self.terms.entry(ws.clone()).or_insert_with(LaurentScalar::zero);
            *entry -= c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        let mut out = Tensor::zero(self.legs.clone());
        for (ws, c) in &self.terms {
            out.terms.insert(ws.clone(), -c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::catalog;
    use crate::ncalg::word::Gen;

    fn arc(p: Presentation) -> Arc<Presentation> {
        Arc::new(p)
    }

    #[test]
    fn legwise_normalization_applies() {
        let s2 = arc(catalog::sphere(2));
        let u1 = arc(catalog::u1());
        let mut t = Tensor::zero(vec![s2.clone(), u1.clone()]);
        // z1 z0 (x) v v* normalizes to q^-1 z0 z1 (x) 1.
        t.add_term(
            vec![
                Word(vec![Gen::new(1), Gen::new(0)]),
                Word(vec![Gen::new(0), Gen::starred(0)]),
            ],
            LaurentScalar::one(),
        );
        assert_eq!(t.num_terms(), 1);
        let (ws, c) = t.terms().next().unwrap();
        assert_eq!(ws[0], Word(vec![Gen::new(0), Gen::new(1)]));
        assert!(ws[1].is_one());
        assert_eq!(*c, LaurentScalar::q_pow(-1));
    }

    #[test]
    fn merge_and_permute() {
        let u1 = arc(catalog::u1());
        let v = NCPoly::from_gen(Gen::new(0));
        let vs = NCPoly::from_gen(Gen::starred(0));
        let t = Tensor::from_polys(vec![u1.clone(), u1.clone()], &[&v, &vs]);
        // v (x) v* merges to vv* = 1.
        let merged = t.merge_legs(0);
        assert!(merged.as_poly().is_one());
        let flipped = t.permute_legs(&[1, 0]);
        let expect = Tensor::from_polys(vec![u1.clone(), u1.clone()], &[&vs, &v]);
        assert_eq!(flipped, expect);
    }

    #[test]
    fn componentwise_multiplication() {
        let s2 = arc(catalog::sphere(2));
        let u1 = arc(catalog::u1());
        let z0 = NCPoly::from_gen(Gen::new(0));
        let z0s = NCPoly::from_gen(Gen::starred(0));
        let v = NCPoly::from_gen(Gen::new(0));
        let vs = NCPoly::from_gen(Gen::starred(0));
        let a = Tensor::from_polys(vec![s2.clone(), u1.clone()], &[&z0, &v]);
        let b = Tensor::from_polys(vec![s2.clone(), u1.clone()], &[&z0s, &vs]);
        let ab = a.mul(&b);
        // z0 z0* (x) v v* = (1 - z1^2) (x) 1.
        let one = NCPoly::one();
        let z1sq = NCPoly::from_word(Word(vec![Gen::new(1), Gen::new(1)]));
        let expect = Tensor::from_polys(vec![s2, u1], &[&(&one - &z1sq), &one]);
        assert_eq!(ab, expect);
    }

    #[test]
    fn map_leg_replaces_and_expands() {
        let u1 = arc(catalog::u1());
        let z2 = arc(catalog::z2());
        let v = NCPoly::from_gen(Gen::new(0));
        let t = Tensor::from_polys(vec![u1.clone(), u1.clone()], &[&v, &v]);
        // Send the second leg through v^k -> u^k (the parity character).
        let z2c = z2.clone();
        let mapped = t.map_leg(1, &[z2.clone()], |w| {
            Tensor::from_poly(z2c.clone(), &z2c.normal_form_word(&Word(vec![Gen::new(0); w.len()])))
        });
        let u = NCPoly::from_gen(Gen::new(0));
        assert_eq!(mapped, Tensor::from_polys(vec![u1, z2], &[&v, &u]));
    }
}
