//! Comodule algebras: coactions, coinvariant subalgebras, cotensor
//! products at bounded bidegree, and the coinvariant-preservation checks.

use std::sync::Arc;

use crate::hopf::structure::HopfAlgebra;
use crate::hopf::tensor::Tensor;
use crate::ncalg::catalog;
use crate::ncalg::linalg::{self, LMat};
use crate::ncalg::morphism::AlgebraMorphism;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::{Gen, Word};
use crate::report::CheckRecord;
use crate::{Error, Result};

#[derive(Clone)]
enum CoKernel {
    /// Each letter `g` of degree `d` maps to `g (x) t^d`, where `t` is the
    /// single group-like generator of the structure Hopf algebra.
    GradedDiagonal,
    /// `a -> a (x) 1`.
    Trivial,
    /// `A = H` coacting on itself by the coproduct.
    Regular,
}

/// A right coaction `rho: A -> A (x) H` that is an algebra map.
#[derive(Clone)]
pub struct Coaction {
    pub algebra: Arc<Presentation>,
    pub hopf: HopfAlgebra,
    kernel: CoKernel,
}

impl Coaction {
    /// The diagonal coaction by the Z-grading of `algebra`; `hopf` must be
    /// generated by a single group-like generator.
    pub fn graded_diagonal(algebra: Arc<Presentation>, hopf: HopfAlgebra) -> Result<Self> {
        if hopf.algebra.num_gens() != 1 {
            return Err(Error::Unsupported(format!(
                "graded diagonal coaction needs a single structure generator, {} has {}",
                hopf.algebra.id,
                hopf.algebra.num_gens()
            )));
        }
        Ok(Self {
            algebra,
            hopf,
            kernel: CoKernel::GradedDiagonal,
        })
    }

    pub fn trivial(algebra: Arc<Presentation>, hopf: HopfAlgebra) -> Self {
        Self {
            algebra,
            hopf,
            kernel: CoKernel::Trivial,
        }
    }

    pub fn regular(hopf: HopfAlgebra) -> Self {
        Self {
            algebra: hopf.algebra.clone(),
            hopf,
            kernel: CoKernel::Regular,
        }
    }

    pub fn legs(&self) -> Vec<Arc<Presentation>> {
        vec![self.algebra.clone(), self.hopf.algebra.clone()]
    }

    /// The group-like word `t^k` (negative `k` uses the starred letter).
    fn marker(&self, k: i64) -> Word {
        let g = if k >= 0 { Gen::new(0) } else { Gen::starred(0) };
        Word(vec![g; k.unsigned_abs() as usize])
    }

    fn letter_image(&self, g: Gen) -> Tensor {
        let mut t = Tensor::zero(self.legs());
        match self.kernel {
            CoKernel::GradedDiagonal => {
                let d = self.algebra.signed_degree(&Word::single(g));
                t.add_term(vec![Word::single(g), self.marker(d)], LaurentScalar::one());
            }
            CoKernel::Trivial => {
                t.add_term(vec![Word::single(g), Word::one()], LaurentScalar::one());
            }
            CoKernel::Regular => return self.hopf.coproduct_gen(g),
        }
        t
    }

    /// The coaction on a word evaluated letter by letter, without
    /// normalizing it first; used to check multiplicativity on relations.
    pub fn apply_raw_word(&self, w: &Word) -> Tensor {
        let mut t = Tensor::unit(self.legs());
        for &g in &w.0 {
            t = t.mul(&self.letter_image(g));
        }
        t
    }

    pub fn apply_word(&self, w: &Word) -> Tensor {
        match self.kernel {
            CoKernel::GradedDiagonal => {
                let mut t = Tensor::zero(self.legs());
                t.add_term(
                    vec![w.clone(), self.marker(self.algebra.signed_degree(w))],
                    LaurentScalar::one(),
                );
                t
            }
            CoKernel::Trivial => {
                let mut t = Tensor::zero(self.legs());
                t.add_term(vec![w.clone(), Word::one()], LaurentScalar::one());
                t
            }
            CoKernel::Regular => self.hopf.coproduct_word(w),
        }
    }

    pub fn apply(&self, p: &NCPoly) -> Tensor {
        let nf = self.algebra.normal_form(p);
        let mut out = Tensor::zero(self.legs());
        for (w, c) in nf.iter() {
            out += &self.apply_word(w).scale(c);
        }
        out
    }

    /// If `rho(w) = w (x) m` with unit coefficient, returns `m`.
    pub fn single_term_marker(&self, w: &Word) -> Option<Word> {
        let t = self.apply_word(w);
        if t.num_terms() != 1 {
            return None;
        }
        let (ws, c) = t.terms().next().unwrap();
        if ws[0] == *w && c.is_one() {
            Some(ws[1].clone())
        } else {
            None
        }
    }

    pub fn verify(&self, d: usize, prefix: &str) -> Vec<CheckRecord> {
        let mut out = Vec::new();
        let a = &self.algebra;
        let h = &self.hopf;

        let mut mult = Ok(());
        for (k, rule) in a.rules.iter().enumerate() {
            if self.apply_raw_word(&rule.lhs) != self.apply(&rule.rhs) {
                mult = Err(format!("rule {}: {}", k, a.fmt_word(&rule.lhs)));
                break;
            }
        }
        out.push(CheckRecord::from_bool(
            format!("{prefix}.algebra_map"),
            "rho(l) = rho(r) for every defining relation l = r",
            mult.is_ok(),
            || mult.as_ref().err().cloned().unwrap_or_default(),
        ));

        let unit_ok = self.apply_word(&Word::one()) == Tensor::unit(self.legs());
        out.push(CheckRecord::from_bool(
            format!("{prefix}.unital"),
            "rho(1) = 1 (x) 1",
            unit_ok,
            || "rho(1) != 1 (x) 1".to_string(),
        ));

        let mut coassoc = Ok(());
        let mut counit = Ok(());
        for w in a.basis_enumerate(d) {
            let tag = || a.fmt_word(&w);
            let t = self.apply_word(&w);
            if coassoc.is_ok() {
                let left = t.map_leg(0, &self.legs(), |x| self.apply_word(x));
                let right = t.map_leg(1, &[h.algebra.clone(), h.algebra.clone()], |x| {
                    h.coproduct_word(x)
                });
                if left != right {
                    coassoc = Err(tag());
                }
            }
            if counit.is_ok() {
                let collapsed = t.map_leg(1, &[], |x| {
                    let mut s = Tensor::zero(vec![]);
                    s.add_term(vec![], h.counit_word(x));
                    s
                });
                if collapsed != Tensor::from_poly(a.clone(), &NCPoly::from_word(w.clone())) {
                    counit = Err(tag());
                }
            }
        }
        let rec = |name: &str, law: &str, r: std::result::Result<(), String>| {
            CheckRecord::from_bool(format!("{prefix}.{name}"), law, r.is_ok(), || {
                format!("fails at {}", r.as_ref().err().cloned().unwrap_or_default())
            })
            .with_bounded_degree(d as u32)
        };
        out.push(rec("coassoc", "(rho (x) id) rho = (id (x) Delta) rho", coassoc));
        out.push(rec("counit_law", "(id (x) epsilon) rho = id", counit));
        out
    }

    pub fn is_coinvariant(&self, p: &NCPoly) -> bool {
        let nf = self.algebra.normal_form(p);
        let expect = Tensor::from_polys(self.legs(), &[&nf, &NCPoly::one()]);
        self.apply(&nf) == expect
    }

    /// Basis words of the coinvariant subalgebra in degree ≤ d.  Exact for
    /// diagonal-type coactions, where basis words are coaction eigenvectors.
    pub fn coinvariant_words(&self, d: usize) -> Vec<Word> {
        self.algebra
            .basis_enumerate(d)
            .into_iter()
            .filter(|w| self.is_coinvariant(&NCPoly::from_word(w.clone())))
            .collect()
    }
}

/// A left coaction `lambda: P -> Hbar (x) P`.
#[derive(Clone)]
pub struct LeftCoaction {
    /// The coacted-on Hopf algebra `H`.
    pub hopf: HopfAlgebra,
    /// The structure quotient `Hbar`.
    pub quotient: HopfAlgebra,
    kernel: LeftKernel,
}

#[derive(Clone)]
enum LeftKernel {
    /// `lambda = (pi (x) id) o Delta` for a Hopf surjection `pi: H -> Hbar`.
    ViaProjection(AlgebraMorphism),
    /// `Hbar = H`, `lambda = Delta`.
    Regular,
}

impl LeftCoaction {
    pub fn via_projection(hopf: HopfAlgebra, quotient: HopfAlgebra, pi: AlgebraMorphism) -> Result<Self> {
        if pi.source.id != hopf.algebra.id || pi.target.id != quotient.algebra.id {
            return Err(Error::Unsupported(format!(
                "projection {} does not map {} onto {}",
                pi.name, hopf.algebra.id, quotient.algebra.id
            )));
        }
        Ok(Self {
            hopf,
            quotient,
            kernel: LeftKernel::ViaProjection(pi),
        })
    }

    pub fn regular(hopf: HopfAlgebra) -> Self {
        Self {
            quotient: hopf.clone(),
            hopf,
            kernel: LeftKernel::Regular,
        }
    }

    pub fn legs(&self) -> Vec<Arc<Presentation>> {
        vec![self.quotient.algebra.clone(), self.hopf.algebra.clone()]
    }

    pub fn apply_word(&self, w: &Word) -> Tensor {
        let t = self.hopf.coproduct_word(w);
        match &self.kernel {
            LeftKernel::ViaProjection(pi) => t.map_leg(0, &[self.quotient.algebra.clone()], |x| {
                Tensor::from_poly(self.quotient.algebra.clone(), &pi.apply_word(x))
            }),
            LeftKernel::Regular => t,
        }
    }

    pub fn apply(&self, p: &NCPoly) -> Tensor {
        let nf = self.hopf.algebra.normal_form(p);
        let mut out = Tensor::zero(self.legs());
        for (w, c) in nf.iter() {
            out += &self.apply_word(w).scale(c);
        }
        out
    }

    /// If `lambda(w) = m (x) w` with unit coefficient, returns `m`.
    pub fn single_term_marker(&self, w: &Word) -> Option<Word> {
        let t = self.apply_word(w);
        if t.num_terms() != 1 {
            return None;
        }
        let (ws, c) = t.terms().next().unwrap();
        if ws[1] == *w && c.is_one() {
            Some(ws[0].clone())
        } else {
            None
        }
    }

    pub fn is_coinvariant(&self, p: &NCPoly) -> bool {
        let nf = self.hopf.algebra.normal_form(p);
        let expect = Tensor::from_polys(self.legs(), &[&NCPoly::one(), &nf]);
        self.apply(&nf) == expect
    }

    /// Left-coinvariant basis words `{h : lambda(h) = 1 (x) h}` in degree ≤ d.
    pub fn coinvariant_words(&self, d: usize) -> Vec<Word> {
        self.hopf
            .algebra
            .basis_enumerate(d)
            .into_iter()
            .filter(|w| self.is_coinvariant(&NCPoly::from_word(w.clone())))
            .collect()
    }
}

/// The cotensor product `A □_{Hbar} H` inside `A (x) H`, cut out by
/// `(rho (x) id)(x) = (id (x) lambda)(x)`.
#[derive(Clone)]
pub struct CotensorSpace {
    /// Right `Hbar`-coaction on `A`.
    pub rho: Coaction,
    /// Left `Hbar`-coaction on `H`.
    pub lambda: LeftCoaction,
}

impl CotensorSpace {
    pub fn new(rho: Coaction, lambda: LeftCoaction) -> Result<Self> {
        if rho.hopf.algebra.id != lambda.quotient.algebra.id {
            return Err(Error::Unsupported(format!(
                "cotensor coactions disagree on the structure algebra: {} vs {}",
                rho.hopf.algebra.id, lambda.quotient.algebra.id
            )));
        }
        Ok(Self { rho, lambda })
    }

    pub fn legs(&self) -> Vec<Arc<Presentation>> {
        vec![self.rho.algebra.clone(), self.lambda.hopf.algebra.clone()]
    }

    /// `(rho (x) id)(t) - (id (x) lambda)(t)` in `A (x) Hbar (x) H`.
    pub fn membership_residual(&self, t: &Tensor) -> Tensor {
        let left = t.map_leg(0, &self.rho.legs(), |w| self.rho.apply_word(w));
        let right = t.map_leg(1, &self.lambda.legs(), |x| self.lambda.apply_word(x));
        &left - &right
    }

    pub fn contains(&self, t: &Tensor) -> bool {
        self.membership_residual(t).is_zero()
    }

    /// Basis of the cotensor truncation with leg degrees ≤ (d_a, d_h).
    /// Requires both coactions to be diagonal on basis words (each word an
    /// eigenvector), which holds for all bundled quotient data.
    pub fn basis(&self, d_a: usize, d_h: usize) -> Result<Vec<(Word, Word)>> {
        let mut pairs = Vec::new();
        let h_words = self.lambda.hopf.algebra.basis_enumerate(d_h);
        let mut h_markers = Vec::new();
        for x in &h_words {
            let m = self.lambda.single_term_marker(x).ok_or_else(|| {
                Error::Unsupported(format!(
                    "left coaction is not diagonal on {}",
                    self.lambda.hopf.algebra.fmt_word(x)
                ))
            })?;
            h_markers.push(m);
        }
        for w in self.rho.algebra.basis_enumerate(d_a) {
            let mw = self.rho.single_term_marker(&w).ok_or_else(|| {
                Error::Unsupported(format!(
                    "right coaction is not diagonal on {}",
                    self.rho.algebra.fmt_word(&w)
                ))
            })?;
            for (x, mx) in h_words.iter().zip(&h_markers) {
                if mw == *mx {
                    pairs.push((w.clone(), x.clone()));
                }
            }
        }
        Ok(pairs)
    }

    /// Component-wise product; the cotensor is closed under it.
    pub fn multiply(&self, s: &Tensor, t: &Tensor) -> Tensor {
        s.mul(t)
    }

    /// Right H-coaction `id (x) Delta` on the cotensor (the prolonged
    /// coaction), as a tensor in `A (x) H (x) H`.
    pub fn prolonged_coaction(&self, t: &Tensor) -> Tensor {
        let h = &self.lambda.hopf;
        t.map_leg(1, &[h.algebra.clone(), h.algebra.clone()], |x| {
            h.coproduct_word(x)
        })
    }

    /// Coinvariants of the prolonged coaction in bidegree ≤ (d, d):
    /// elements `b (x) 1` with `b` coinvariant in `A`.
    pub fn prolonged_coinvariants(&self, d: usize) -> Result<Vec<(Word, Word)>> {
        let unit = Tensor::unit(vec![self.lambda.hopf.algebra.clone()]);
        Ok(self
            .basis(d, d)?
            .into_iter()
            .filter(|(w, x)| {
                let mut t = Tensor::zero(self.legs());
                t.add_term(vec![w.clone(), x.clone()], LaurentScalar::one());
                let c = self.prolonged_coaction(&t);
                let expect = t.outer(&unit);
                c == expect
            })
            .collect())
    }
}

/// Coinvariants of the prolonged comodule algebra match the original base:
/// `(A □_{Hbar} H)^{co H} = {b (x) 1 : b in A^{co Hbar}}`, degree-wise.
pub fn check_coinvariant_iso(cot: &CotensorSpace, d: usize) -> Result<bool> {
    let prolonged = cot.prolonged_coinvariants(d)?;
    let base: Vec<Word> = cot.rho.coinvariant_words(d);
    let expected: Vec<(Word, Word)> = base.into_iter().map(|w| (w, Word::one())).collect();
    Ok(prolonged == expected)
}

/// The cotensor `O(S^m_q) □_{O(Z_2)} H`, where the sphere carries the
/// parity coaction and `H` covers `O(Z_2)` through `pi`.
pub fn sphere_cotensor(m: usize, h: HopfAlgebra, pi: AlgebraMorphism) -> Result<CotensorSpace> {
    let z2 = HopfAlgebra::bundled("z2")?;
    let rho = Coaction::graded_diagonal(Arc::new(catalog::sphere(m)), z2.clone())?;
    let lambda = LeftCoaction::via_projection(h, z2, pi)?;
    CotensorSpace::new(rho, lambda)
}

/// True iff `x` lies in the span of products of `gens` whose normal forms
/// fit in degree ≤ d (the empty product included).
pub fn subalgebra_membership(
    x: &NCPoly,
    gens: &[NCPoly],
    p: &Presentation,
    d: usize,
) -> bool {
    let x = p.normal_form(x);
    if x.is_zero() {
        return true;
    }
    if x.max_len() > d {
        return false;
    }
    // Breadth-first closure of products, deduplicated by normal form.
    let mut products: Vec<NCPoly> = vec![NCPoly::one()];
    let mut frontier: Vec<NCPoly> = vec![NCPoly::one()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let prod = p.multiply(f, g);
                if prod.is_zero() || prod.max_len() > d {
                    continue;
                }
                if !products.contains(&prod) {
                    products.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    // Row space: every normal word reached by the products or the target.
    let mut rows: Vec<Word> = Vec::new();
    let mut note = |poly: &NCPoly| {
        for (w, _) in poly.iter() {
            if !rows.contains(w) {
                rows.push(w.clone());
            }
        }
    };
    for prod in &products {
        note(prod);
    }
    note(&x);
    rows.sort();
    let mut a = LMat::zeros(rows.len(), products.len());
    for (j, prod) in products.iter().enumerate() {
        for (w, c) in prod.iter() {
            let i = rows.binary_search(w).unwrap();
            a.set(i, j, c.clone());
        }
    }
    let mut b = vec![LaurentScalar::zero(); rows.len()];
    for (w, c) in x.iter() {
        b[rows.binary_search(w).unwrap()] = c.clone();
    }
    linalg::solve_in_ring(&a, &b).is_some()
}

/// The generators of the base of the mirror sphere: `P = q^{-2} z_1^2`,
/// `R = z_0^2`, `T = q^{-1} z_1 z_0` inside `O(S^2_q)`.
pub fn rp2_generator_images() -> (NCPoly, NCPoly, NCPoly) {
    let s2 = catalog::sphere(2);
    let z0 = Gen::new(0);
    let z1 = Gen::new(1);
    let p = NCPoly::from_term(Word(vec![z1, z1]), LaurentScalar::q_pow(-2));
    let r = NCPoly::from_word(Word(vec![z0, z0]));
    // z1 z0 reorders to q^-1 z0 z1; keep the images in normal form so they
    // compare directly against normalized products.
    let t = s2.normal_form(&NCPoly::from_term(Word(vec![z1, z0]), LaurentScalar::q_pow(-1)));
    (p, r, t)
}

/// The defining embedding of the mirror quantum projective plane into the
/// equator sphere.
pub fn rp2_embedding() -> AlgebraMorphism {
    let rp2 = Arc::new(catalog::rp2());
    let s2 = Arc::new(catalog::sphere(2));
    let (p, r, t) = rp2_generator_images();
    AlgebraMorphism::new("rp2_embed", rp2, s2, vec![p, r, t]).expect("bundled embedding is valid")
}

/// Each defining relation of the mirror projective plane, evaluated on the
/// embedded generators inside `O(S^2_q)`; one record per relation.
pub fn rp2_relation_records(prefix: &str) -> Vec<CheckRecord> {
    let s2 = Arc::new(catalog::sphere(2));
    let (p, r, t) = rp2_generator_images();
    let ps = s2.star(&p);
    let rs = s2.star(&r);
    let ts = s2.star(&t);
    let mul = |a: &NCPoly, b: &NCPoly| s2.multiply(a, b);
    let q = LaurentScalar::q_pow;
    let one = NCPoly::one();
    let p2 = mul(&p, &p);

    let cases: Vec<(&str, NCPoly, NCPoly)> = vec![
        ("P* = P", ps.clone(), p.clone()),
        ("T^2 = q P R", mul(&t, &t), mul(&p, &r).scale(&q(1))),
        (
            "R T* = q T (1 - q^2 P)",
            mul(&r, &ts),
            mul(&t, &(&one - &p.scale(&q(2)))).scale(&q(1)),
        ),
        (
            "R* T = q^{-1} T* (1 - P)",
            mul(&rs, &t),
            mul(&ts, &(&one - &p)).scale(&q(-1)),
        ),
        (
            "R R* = q^6 P^2 - q^2 (1 + q^2) P + 1",
            mul(&r, &rs),
            &(&p2.scale(&q(6)) - &p.scale(&(q(2) + q(4)))) + &one,
        ),
        (
            "R* R = q^{-2} P^2 - (1 + q^{-2}) P + 1",
            mul(&rs, &r),
            &(&p2.scale(&q(-2)) - &p.scale(&(q(0) + q(-2)))) + &one,
        ),
        ("T T* = P - q^2 P^2", mul(&t, &ts), &p - &p2.scale(&q(2))),
        (
            "T* T = q^{-2} (P - P^2)",
            mul(&ts, &t),
            (&p - &p2).scale(&q(-2)),
        ),
        ("R P = q^4 P R", mul(&r, &p), mul(&p, &r).scale(&q(4))),
        ("R T = q^2 T R", mul(&r, &t), mul(&t, &r).scale(&q(2))),
        ("P T = q^{-2} T P", mul(&p, &t), mul(&t, &p).scale(&q(-2))),
    ];

    cases
        .into_iter()
        .enumerate()
        .map(|(i, (law, lhs, rhs))| {
            CheckRecord::from_bool(format!("{prefix}.relation[{i}]"), law, lhs == rhs, || {
                format!(
                    "lhs = {}, rhs = {}",
                    s2.fmt_poly(&lhs),
                    s2.fmt_poly(&rhs)
                )
            })
        })
        .collect()
}

/// `kappa: A (x) {}^{co Hbar}H -> A □_{Hbar} H`, `a (x) h -> a_(0) (x) a_(1) h`,
/// for a commutative structure Hopf algebra `H`.
pub struct KappaContext {
    /// Right `H`-coaction on `A`.
    pub rho_h: Coaction,
    /// Left `Hbar`-coaction on `H` (via the projection).
    pub lambda: LeftCoaction,
    /// The target cotensor `A □_{Hbar} H`.
    pub cotensor: CotensorSpace,
}

impl KappaContext {
    pub fn new(rho_h: Coaction, rho_hbar: Coaction, lambda: LeftCoaction) -> Result<Self> {
        if !rho_h.hopf.algebra.is_commutative() {
            return Err(Error::Unsupported(format!(
                "kappa needs a commutative structure Hopf algebra, {} is not",
                rho_h.hopf.algebra.id
            )));
        }
        if rho_h.hopf.algebra.id != lambda.hopf.algebra.id {
            return Err(Error::Unsupported(
                "kappa coactions live over different Hopf algebras".to_string(),
            ));
        }
        let cotensor = CotensorSpace::new(rho_hbar, lambda.clone())?;
        Ok(Self {
            rho_h,
            lambda,
            cotensor,
        })
    }

    pub fn legs(&self) -> Vec<Arc<Presentation>> {
        vec![self.rho_h.algebra.clone(), self.rho_h.hopf.algebra.clone()]
    }

    /// `a (x) h -> a_(0) (x) a_(1) h`.
    pub fn kappa(&self, t: &Tensor) -> Tensor {
        t.map_leg(0, &self.rho_h.legs(), |w| self.rho_h.apply_word(w))
            .merge_legs(1)
    }

    /// `a (x) h -> a_(0) (x) S(a_(1)) h`.
    pub fn kappa_inv(&self, t: &Tensor) -> Tensor {
        let h = self.rho_h.hopf.clone();
        t.map_leg(0, &self.rho_h.legs(), move |w| {
            self.rho_h
                .apply_word(w)
                .map_leg(1, &[h.algebra.clone()], |x| {
                    Tensor::from_poly(h.algebra.clone(), &h.antipode_word(x))
                })
        })
        .merge_legs(1)
    }

    /// Basis of `A (x) {}^{co Hbar}H` at bidegree ≤ (d_a, d_h).
    pub fn source_basis(&self, d_a: usize, d_h: usize) -> Vec<(Word, Word)> {
        let coinv = self.lambda.coinvariant_words(d_h);
        let mut out = Vec::new();
        for w in self.rho_h.algebra.basis_enumerate(d_a) {
            for x in &coinv {
                out.push((w.clone(), x.clone()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::maps;
    use crate::ncalg::morphism::morphism_verified;

    fn arc(p: Presentation) -> Arc<Presentation> {
        Arc::new(p)
    }

    fn word(gens: &[Gen]) -> Word {
        Word(gens.to_vec())
    }

    #[test]
    fn graded_coactions_verify() {
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let u1 = HopfAlgebra::bundled("u1").unwrap();
        let s2 = Coaction::graded_diagonal(arc(catalog::sphere(2)), z2.clone()).unwrap();
        let s3 = Coaction::graded_diagonal(arc(catalog::sphere(3)), u1.clone()).unwrap();
        let triv = Coaction::trivial(arc(catalog::sphere(2)), u1);
        for (co, d) in [(&s2, 3), (&s3, 3), (&triv, 2)] {
            for r in co.verify(d, "t") {
                assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
            }
        }
    }

    #[test]
    fn su2_z2_coaction_agrees_with_the_projected_coproduct() {
        // (id (x) pi) Delta on O(SU_q(2)) is the graded diagonal coaction.
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let pi = maps::pi_su2_z2();
        let diag = Coaction::graded_diagonal(su2.algebra.clone(), z2.clone()).unwrap();
        for w in su2.algebra.basis_enumerate(2) {
            let projected = su2
                .coproduct_word(&w)
                .map_leg(1, &[z2.algebra.clone()], |x| {
                    Tensor::from_poly(z2.algebra.clone(), &pi.apply_word(x))
                });
            assert_eq!(projected, diag.apply_word(&w), "at {}", su2.algebra.fmt_word(&w));
        }
    }

    #[test]
    fn coinvariants_match_the_parity_filter() {
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let s2 = Coaction::graded_diagonal(arc(catalog::sphere(2)), z2.clone()).unwrap();
        let words = s2.coinvariant_words(2);
        let expect: Vec<Word> = s2
            .algebra
            .basis_enumerate(2)
            .into_iter()
            .filter(|w| w.len() % 2 == 0)
            .collect();
        assert_eq!(words, expect);
        assert_eq!(words.len(), 6);

        // O(U(1)) under Z_2 via pi2: even powers of v.
        let u1 = Coaction::graded_diagonal(arc(catalog::u1()), z2).unwrap();
        let inv = u1.coinvariant_words(4);
        let v = Gen::new(0);
        let vs = Gen::starred(0);
        assert_eq!(
            inv,
            vec![
                Word::one(),
                word(&[v, v]),
                word(&[vs, vs]),
                word(&[v, v, v, v]),
                word(&[vs, vs, vs, vs]),
            ]
        );
    }

    #[test]
    fn rp2_embeds_and_spans_the_even_subalgebra() {
        let m = rp2_embedding();
        assert!(morphism_verified(&m));
        let (p, r, t) = rp2_generator_images();
        let s2 = catalog::sphere(2);
        let s2ref = &s2;
        let star = |x: &NCPoly| s2ref.star(x);
        let gens = vec![p.clone(), r.clone(), star(&r), t.clone(), star(&t)];
        // Every even coinvariant word lies in <P, R, T>; z_0 does not.
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let co = Coaction::graded_diagonal(arc(catalog::sphere(2)), z2).unwrap();
        for w in co.coinvariant_words(2) {
            assert!(
                subalgebra_membership(&NCPoly::from_word(w.clone()), &gens, s2ref, 4),
                "{} not in the span",
                s2ref.fmt_word(&w)
            );
        }
        let z0 = NCPoly::from_gen(Gen::new(0));
        assert!(!subalgebra_membership(&z0, &gens, s2ref, 4));
    }

    #[test]
    fn rp2_relations_hold_on_the_embedded_generators() {
        let recs = rp2_relation_records("t");
        assert_eq!(recs.len(), 11);
        for r in recs {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    fn sphere_u1_cotensor(m: usize) -> CotensorSpace {
        let u1 = HopfAlgebra::bundled("u1").unwrap();
        sphere_cotensor(m, u1, maps::pi2()).unwrap()
    }

    #[test]
    fn cotensor_membership_examples() {
        let cot = sphere_u1_cotensor(2);
        let legs = cot.legs();
        let v = Gen::new(0);
        let vs = Gen::starred(0);
        let mk = |wa: Word, wh: Word| {
            let mut t = Tensor::zero(legs.clone());
            t.add_term(vec![wa, wh], LaurentScalar::one());
            t
        };
        assert!(cot.contains(&mk(Word::single(Gen::new(0)), Word::single(v))));
        assert!(!cot.contains(&mk(Word::one(), Word::single(v))));
        assert!(cot.contains(&mk(Word::one(), word(&[vs, vs]))));
        // Closure under multiplication.
        let x = mk(Word::single(Gen::new(0)), Word::single(v));
        let y = mk(Word::one(), word(&[vs, vs]));
        assert!(cot.contains(&cot.multiply(&x, &y)));
        // Fast-path basis matches the membership filter.
        let basis = cot.basis(2, 2).unwrap();
        for (wa, wh) in &basis {
            assert!(cot.contains(&mk(wa.clone(), wh.clone())));
        }
        assert!(basis.contains(&(Word::one(), word(&[vs, vs]))));
        assert!(!basis.contains(&(Word::one(), Word::single(v))));
    }

    #[test]
    fn prolonged_coinvariants_reproduce_the_base() {
        let cot = sphere_u1_cotensor(2);
        assert!(check_coinvariant_iso(&cot, 2).unwrap());
    }

    #[test]
    fn kappa_examples_and_round_trip() {
        // A = O(S^3_q), H = O(U(1)), Hbar = O(Z_2).
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let u1 = HopfAlgebra::bundled("u1").unwrap();
        let s3 = arc(catalog::sphere(3));
        let rho_h = Coaction::graded_diagonal(s3.clone(), u1.clone()).unwrap();
        let rho_hbar = Coaction::graded_diagonal(s3, z2.clone()).unwrap();
        let lambda = LeftCoaction::via_projection(u1.clone(), z2, maps::pi2()).unwrap();
        let ctx = KappaContext::new(rho_h, rho_hbar, lambda).unwrap();

        let v = Gen::new(0);
        let mut x = Tensor::zero(ctx.legs());
        x.add_term(vec![Word::single(Gen::new(0)), word(&[v, v])], LaurentScalar::one());
        let kx = ctx.kappa(&x);
        let mut expect = Tensor::zero(ctx.legs());
        expect.add_term(
            vec![Word::single(Gen::new(0)), word(&[v, v, v])],
            LaurentScalar::one(),
        );
        assert_eq!(kx, expect);
        assert!(ctx.cotensor.contains(&kx));
        assert_eq!(ctx.kappa_inv(&kx), x);

        // Unit case and a full source-basis round trip.
        let unit = Tensor::unit(ctx.legs());
        assert_eq!(ctx.kappa(&unit), unit);
        for (wa, wh) in ctx.source_basis(2, 2) {
            let mut t = Tensor::zero(ctx.legs());
            t.add_term(vec![wa, wh], LaurentScalar::one());
            let k = ctx.kappa(&t);
            assert!(ctx.cotensor.contains(&k));
            assert_eq!(ctx.kappa_inv(&k), t);
        }
    }

    #[test]
    fn kappa_rejects_a_noncommutative_structure_algebra() {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        let z2 = HopfAlgebra::bundled("z2").unwrap();
        let s3 = arc(catalog::sphere(3));
        // The su2 coaction here is artificial; the guard fires first.
        let rho_h = Coaction::trivial(s3.clone(), su2.clone());
        let rho_hbar = Coaction::graded_diagonal(s3, z2.clone()).unwrap();
        let lambda = LeftCoaction::via_projection(su2, z2, maps::pi_su2_z2()).unwrap();
        assert!(KappaContext::new(rho_h, rho_hbar, lambda).is_err());
    }
}
