//! Bundled algebra presentations.
//!
//! Each builder returns a presentation whose rewrite system terminates and
//! whose normal words admit a closed-form count per length ([`DimFormula`]);
//! the confluence probe compares enumeration against that count.
//!
//! Conventions for the quantum spheres `O(S^m_q)` on generators
//! `z0, ..., zn`:
//! * `zi zj = q zj zi` and `zi zj* = q zj* zi` for `i < j`,
//! * `zi zi* = zi* zi + (q^-2 - 1) sum_{m>i} zm zm*`,
//! * `sum_m zm zm* = 1`, and for even `m` the last generator is
//!   self-adjoint.
//!
//! Rules are oriented to move high indices right and collapse same-index
//! pairs; the geometric sums below are the closed normal forms of the
//! reflection and radius relations under that orientation.

use super::poly::NCPoly;
use super::presentation::{GenInfo, HopfSpec, Presentation, RewriteRule};
use super::scalar::LaurentScalar;
use super::word::{Gen, Word};
use crate::{Error, Result};

fn q(k: i64) -> LaurentScalar {
    LaurentScalar::q_pow(k)
}

fn rule(lhs: Vec<Gen>, rhs: Vec<(LaurentScalar, Vec<Gen>)>) -> RewriteRule {
    RewriteRule {
        lhs: Word(lhs),
        rhs: NCPoly::from_terms(rhs.into_iter().map(|(c, w)| (Word(w), c))),
    }
}

/// Closed-form number of normal words of a given length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimFormula {
    /// Sphere with top index `n`; `even` marks a self-adjoint last generator.
    Sphere { n: usize, even: bool },
    /// Prolongation algebra: even-sphere letters plus a central unitary.
    Prolong { n: usize },
    Su2,
    U1,
    Z2,
    Zp { p: u32 },
    Rp2,
}

fn convolve(a: &[u128], b: &[u128]) -> Vec<u128> {
    let len = a.len();
    let mut out = vec![0u128; len];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if i + j < len {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl DimFormula {
    /// Number of normal words of length exactly `len`.
    pub fn count(&self, len: usize) -> u128 {
        // Counting series per block: `two_sided` is a pure power of one
        // letter or its star (1, 2, 2, ...), `split` an ordered pair of
        // exponents (1, 2, 3, ...), `single` a pure power (all 1).
        let l = len + 1;
        let two_sided: Vec<u128> = (0..l).map(|i| if i == 0 { 1 } else { 2 }).collect();
        let split: Vec<u128> = (0..l).map(|i| i as u128 + 1).collect();
        let single: Vec<u128> = vec![1; l];
        match *self {
            DimFormula::Sphere { n, even } => {
                let mut acc = two_sided.clone();
                let splits = if even { n.saturating_sub(1) } else { n };
                for _ in 0..splits {
                    acc = convolve(&acc, &split);
                }
                if even {
                    acc = convolve(&acc, &single);
                }
                acc[len]
            }
            DimFormula::Prolong { n } => {
                let mut acc = convolve(&two_sided, &two_sided);
                for _ in 0..n.saturating_sub(1) {
                    acc = convolve(&acc, &split);
                }
                acc = convolve(&acc, &single);
                acc[len]
            }
            DimFormula::Su2 => ((len + 1) * (len + 1)) as u128,
            DimFormula::U1 => {
                if len == 0 {
                    1
                } else {
                    2
                }
            }
            DimFormula::Z2 => {
                if len <= 1 {
                    1
                } else {
                    0
                }
            }
            DimFormula::Zp { p } => {
                if (len as u32) < p {
                    1
                } else {
                    0
                }
            }
            DimFormula::Rp2 => {
                if len == 0 {
                    1
                } else {
                    (4 * len + 1) as u128
                }
            }
        }
    }
}

/// `O(S^m_q)` for `m >= 1`, generators `z0..zn` with `n = floor(m/2)`;
/// for even `m` the top generator is self-adjoint.
pub fn sphere(m: usize) -> Presentation {
    assert!(m >= 1, "sphere dimension must be >= 1");
    let even = m % 2 == 0;
    let n = m / 2;
    let gens: Vec<GenInfo> = (0..=n)
        .map(|i| {
            let info = GenInfo::new(&format!("z{i}"));
            if even && i == n {
                info.self_adjoint()
            } else {
                info
            }
        })
        .collect();

    let zi = |i: usize| Gen::new(i as u16);
    let zs = |i: usize| Gen::starred(i as u16);
    // zr* zr, except the self-adjoint top pair which is zn zn.
    let pair = |r: usize| -> Vec<Gen> {
        if even && r == n {
            vec![zi(n), zi(n)]
        } else {
            vec![zs(r), zi(r)]
        }
    };

    let mut rules = Vec::new();
    for i in 1..=n {
        for j in 0..i {
            let i_sa = even && i == n;
            rules.push(rule(vec![zi(i), zi(j)], vec![(q(-1), vec![zi(j), zi(i)])]));
            rules.push(rule(vec![zi(i), zs(j)], vec![(q(1), vec![zs(j), zi(i)])]));
            if !i_sa {
                rules.push(rule(vec![zs(i), zi(j)], vec![(q(-1), vec![zi(j), zs(i)])]));
                rules.push(rule(vec![zs(i), zs(j)], vec![(q(1), vec![zs(j), zs(i)])]));
            }
        }
    }
    // Reflections: zi zi* -> zi* zi + (q^-2 - 1) sum_{r>i} q^{-2(r-i-1)} pair(r).
    for i in 1..n {
        let mut rhs = vec![(LaurentScalar::one(), pair(i))];
        for r in i + 1..=n {
            let c = (q(-2) - LaurentScalar::one()) * q(-2 * (r as i64 - i as i64 - 1));
            rhs.push((c, pair(r)));
        }
        rules.push(rule(vec![zi(i), zs(i)], rhs));
    }
    if !even && n >= 1 {
        rules.push(rule(
            vec![zi(n), zs(n)],
            vec![(LaurentScalar::one(), pair(n))],
        ));
    }
    // Radius: z0 z0* -> 1 - sum q^{-2(r-1)} pair(r); z0* z0 with q^{-2r}.
    let mut rhs_a = vec![(LaurentScalar::one(), vec![])];
    let mut rhs_b = vec![(LaurentScalar::one(), vec![])];
    for r in 1..=n {
        rhs_a.push((-q(-2 * (r as i64 - 1)), pair(r)));
        rhs_b.push((-q(-2 * r as i64), pair(r)));
    }
    rules.push(rule(vec![zi(0), zs(0)], rhs_a));
    rules.push(rule(vec![zs(0), zi(0)], rhs_b));

    Presentation::new(&format!("s{m}"), gens, rules)
        .expect("bundled sphere presentation is valid")
        .with_dim_formula(DimFormula::Sphere { n, even })
}

/// The quantum group `O(SU_q(2))`: relabels the 3-sphere via `a = z0`,
/// `b = z1*`, which makes the comultiplication matrix-shaped.
pub fn su2() -> Presentation {
    let gens = vec![GenInfo::new("a"), GenInfo::new("b")];
    let a = Gen::new(0);
    let as_ = Gen::starred(0);
    let b = Gen::new(1);
    let bs = Gen::starred(1);
    let one = LaurentScalar::one;
    let rules = vec![
        rule(vec![b, a], vec![(q(-1), vec![a, b])]),
        rule(vec![b, as_], vec![(q(1), vec![as_, b])]),
        rule(vec![bs, a], vec![(q(-1), vec![a, bs])]),
        rule(vec![bs, as_], vec![(q(1), vec![as_, bs])]),
        rule(vec![bs, b], vec![(one(), vec![b, bs])]),
        rule(vec![a, as_], vec![(one(), vec![]), (-one(), vec![b, bs])]),
        rule(
            vec![as_, a],
            vec![(one(), vec![]), (-q(-2), vec![b, bs])],
        ),
    ];
    Presentation::new("su2", gens, rules)
        .expect("bundled su2 presentation is valid")
        .with_dim_formula(DimFormula::Su2)
}

pub fn su2_hopf() -> HopfSpec {
    let a = Gen::new(0);
    let as_ = Gen::starred(0);
    let b = Gen::new(1);
    let bs = Gen::starred(1);
    let w = |gens: Vec<Gen>| Word(gens);
    let one = LaurentScalar::one;
    HopfSpec {
        coproduct: vec![
            (
                a,
                vec![
                    (one(), w(vec![a]), w(vec![a])),
                    (-q(-1), w(vec![b]), w(vec![bs])),
                ],
            ),
            (
                as_,
                vec![
                    (one(), w(vec![as_]), w(vec![as_])),
                    (-q(-1), w(vec![bs]), w(vec![b])),
                ],
            ),
            (
                b,
                vec![
                    (one(), w(vec![a]), w(vec![b])),
                    (one(), w(vec![b]), w(vec![as_])),
                ],
            ),
            (
                bs,
                vec![
                    (one(), w(vec![bs]), w(vec![a])),
                    (one(), w(vec![as_]), w(vec![bs])),
                ],
            ),
        ],
        counit: vec![
            (a, one()),
            (as_, one()),
            (b, LaurentScalar::zero()),
            (bs, LaurentScalar::zero()),
        ],
        antipode: vec![
            (a, NCPoly::from_gen(as_)),
            (as_, NCPoly::from_gen(a)),
            (b, NCPoly::from_term(w(vec![b]), -q(-1))),
            (bs, NCPoly::from_term(w(vec![bs]), -q(1))),
        ],
        antipode_inv: vec![
            (a, NCPoly::from_gen(as_)),
            (as_, NCPoly::from_gen(a)),
            (b, NCPoly::from_term(w(vec![b]), -q(1))),
            (bs, NCPoly::from_term(w(vec![bs]), -q(-1))),
        ],
    }
}

/// The circle Hopf algebra `O(U(1))` on a unitary group-like `v`.
pub fn u1() -> Presentation {
    let gens = vec![GenInfo::new("v").unitary()];
    let v = Gen::new(0);
    let vs = Gen::starred(0);
    let one = LaurentScalar::one;
    let rules = vec![
        rule(vec![v, vs], vec![(one(), vec![])]),
        rule(vec![vs, v], vec![(one(), vec![])]),
    ];
    Presentation::new("u1", gens, rules)
        .expect("bundled u1 presentation is valid")
        .with_dim_formula(DimFormula::U1)
}

pub fn u1_hopf() -> HopfSpec {
    let v = Gen::new(0);
    let vs = Gen::starred(0);
    let one = LaurentScalar::one;
    HopfSpec {
        coproduct: vec![
            (v, vec![(one(), Word::single(v), Word::single(v))]),
            (vs, vec![(one(), Word::single(vs), Word::single(vs))]),
        ],
        counit: vec![(v, one()), (vs, one())],
        antipode: vec![(v, NCPoly::from_gen(vs)), (vs, NCPoly::from_gen(v))],
        antipode_inv: vec![(v, NCPoly::from_gen(vs)), (vs, NCPoly::from_gen(v))],
    }
}

/// The order-two group Hopf algebra `O(Z_2)` on a self-adjoint unitary
/// group-like `u`.
pub fn z2() -> Presentation {
    let gens = vec![GenInfo::new("u").self_adjoint().unitary()];
    let u = Gen::new(0);
    let rules = vec![rule(vec![u, u], vec![(LaurentScalar::one(), vec![])])];
    Presentation::new("z2", gens, rules)
        .expect("bundled z2 presentation is valid")
        .with_dim_formula(DimFormula::Z2)
}

pub fn z2_hopf() -> HopfSpec {
    let u = Gen::new(0);
    let one = LaurentScalar::one;
    HopfSpec {
        coproduct: vec![(u, vec![(one(), Word::single(u), Word::single(u))])],
        counit: vec![(u, one())],
        antipode: vec![(u, NCPoly::from_gen(u))],
        antipode_inv: vec![(u, NCPoly::from_gen(u))],
    }
}

/// The cyclic group Hopf algebra `O(Z_p)` on a unitary group-like `w`
/// with `w^p = 1`; the star collapses to `w^{p-1}`.
pub fn zp(p: u32) -> Presentation {
    assert!(p >= 2, "cyclic group order must be >= 2");
    let gens = vec![GenInfo::new("w").unitary()];
    let w = Gen::new(0);
    let ws = Gen::starred(0);
    let rules = vec![
        rule(vec![w; p as usize], vec![(LaurentScalar::one(), vec![])]),
        rule(
            vec![ws],
            vec![(LaurentScalar::one(), vec![w; (p - 1) as usize])],
        ),
    ];
    Presentation::new(&format!("zp:{p}"), gens, rules)
        .expect("bundled zp presentation is valid")
        .with_dim_formula(DimFormula::Zp { p })
}

pub fn zp_hopf(p: u32) -> HopfSpec {
    let w = Gen::new(0);
    let ws = Gen::starred(0);
    let one = LaurentScalar::one;
    let wp1 = Word(vec![w; (p - 1) as usize]);
    HopfSpec {
        coproduct: vec![(w, vec![(one(), Word::single(w), Word::single(w))])],
        counit: vec![(w, one()), (ws, one())],
        antipode: vec![
            (w, NCPoly::from_word(wp1.clone())),
            (ws, NCPoly::from_gen(w)),
        ],
        antipode_inv: vec![(w, NCPoly::from_word(wp1)), (ws, NCPoly::from_gen(w))],
    }
}

/// Prolongation algebra for the even sphere `O(S^{2n}_q)`: generators
/// `zeta0..zetaN` and a central unitary `xi` of degree `-2`, with
/// `zetaN* = zetaN xi`.  Its degree-zero part recovers the sphere.
pub fn prolong(n: usize) -> Presentation {
    assert!(n >= 1, "prolongation index must be >= 1");
    let mut gens: Vec<GenInfo> = (0..=n)
        .map(|i| GenInfo::new(&format!("zeta{i}")))
        .collect();
    gens.push(GenInfo::new("xi").central().unitary().degree(-2));

    let zi = |i: usize| Gen::new(i as u16);
    let zs = |i: usize| Gen::starred(i as u16);
    let xi = Gen::new((n + 1) as u16);
    let xis = Gen::starred((n + 1) as u16);
    let pair = |r: usize| -> Vec<Gen> {
        if r == n {
            vec![zi(n), zi(n), xi]
        } else {
            vec![zs(r), zi(r)]
        }
    };

    let mut rules = Vec::new();
    // The starred top letter is eliminated outright.
    rules.push(rule(vec![zs(n)], vec![(LaurentScalar::one(), vec![zi(n), xi])]));
    for i in 1..=n {
        for j in 0..i {
            rules.push(rule(vec![zi(i), zi(j)], vec![(q(-1), vec![zi(j), zi(i)])]));
            rules.push(rule(vec![zi(i), zs(j)], vec![(q(1), vec![zs(j), zi(i)])]));
            if i != n {
                rules.push(rule(vec![zs(i), zi(j)], vec![(q(-1), vec![zi(j), zs(i)])]));
                rules.push(rule(vec![zs(i), zs(j)], vec![(q(1), vec![zs(j), zs(i)])]));
            }
        }
    }
    for i in 1..n {
        let mut rhs = vec![(LaurentScalar::one(), pair(i))];
        for r in i + 1..=n {
            let c = (q(-2) - LaurentScalar::one()) * q(-2 * (r as i64 - i as i64 - 1));
            rhs.push((c, pair(r)));
        }
        rules.push(rule(vec![zi(i), zs(i)], rhs));
    }
    let mut rhs_a = vec![(LaurentScalar::one(), vec![])];
    let mut rhs_b = vec![(LaurentScalar::one(), vec![])];
    for r in 1..=n {
        rhs_a.push((-q(-2 * (r as i64 - 1)), pair(r)));
        rhs_b.push((-q(-2 * r as i64), pair(r)));
    }
    rules.push(rule(vec![zi(0), zs(0)], rhs_a));
    rules.push(rule(vec![zs(0), zi(0)], rhs_b));
    // xi is central and unitary; starred top letters never meet it in a
    // normal prefix, so those commutations are not needed.
    let mut sphere_letters: Vec<Gen> = Vec::new();
    for i in 0..=n {
        sphere_letters.push(zi(i));
        if i != n {
            sphere_letters.push(zs(i));
        }
    }
    for &x in &sphere_letters {
        rules.push(rule(vec![xi, x], vec![(LaurentScalar::one(), vec![x, xi])]));
        rules.push(rule(vec![xis, x], vec![(LaurentScalar::one(), vec![x, xis])]));
    }
    rules.push(rule(vec![xi, xis], vec![(LaurentScalar::one(), vec![])]));
    rules.push(rule(vec![xis, xi], vec![(LaurentScalar::one(), vec![])]));

    Presentation::new(&format!("a2n:{n}"), gens, rules)
        .expect("bundled prolongation presentation is valid")
        .with_dim_formula(DimFormula::Prolong { n })
}

/// The quantum real projective plane `O(RP^2_q)` on generators `P`
/// (self-adjoint), `R`, `T`, all of degree two; presented so that normal
/// words are `P^a R^b T^e` and `P^a R*^b T*^d` with `b + d >= 1`.
pub fn rp2() -> Presentation {
    let gens = vec![
        GenInfo::new("P").self_adjoint().degree(2),
        GenInfo::new("R").degree(2),
        GenInfo::new("T").degree(2),
    ];
    let p = Gen::new(0);
    let r = Gen::new(1);
    let rs = Gen::starred(1);
    let t = Gen::new(2);
    let ts = Gen::starred(2);
    let one = LaurentScalar::one;
    let rules = vec![
        rule(vec![r, p], vec![(q(4), vec![p, r])]),
        rule(vec![rs, p], vec![(q(-4), vec![p, rs])]),
        rule(vec![t, p], vec![(q(2), vec![p, t])]),
        rule(vec![ts, p], vec![(q(-2), vec![p, ts])]),
        rule(vec![t, r], vec![(q(-2), vec![r, t])]),
        rule(vec![ts, rs], vec![(q(2), vec![rs, ts])]),
        rule(
            vec![ts, r],
            vec![(q(-1), vec![t]), (-q(-1), vec![p, t])],
        ),
        rule(vec![t, rs], vec![(q(1), vec![ts]), (-q(3), vec![p, ts])]),
        rule(vec![t, t], vec![(q(1), vec![p, r])]),
        rule(vec![ts, ts], vec![(q(-3), vec![p, rs])]),
        rule(
            vec![t, ts],
            vec![(one(), vec![p]), (-q(2), vec![p, p])],
        ),
        rule(
            vec![ts, t],
            vec![(q(-2), vec![p]), (-q(-2), vec![p, p])],
        ),
        rule(
            vec![r, rs],
            vec![
                (one(), vec![]),
                (-q(2) - q(4), vec![p]),
                (q(6), vec![p, p]),
            ],
        ),
        rule(
            vec![rs, r],
            vec![
                (one(), vec![]),
                (-one() - q(-2), vec![p]),
                (q(-2), vec![p, p]),
            ],
        ),
        rule(vec![r, ts], vec![(q(1), vec![t]), (-q(5), vec![p, t])]),
        rule(vec![rs, t], vec![(q(-1), vec![ts]), (-q(-3), vec![p, ts])]),
    ];
    Presentation::new("rp2", gens, rules)
        .expect("bundled rp2 presentation is valid")
        .with_dim_formula(DimFormula::Rp2)
}

/// Look up a bundled presentation by id: `s1..s5` (any `sM` works),
/// `su2`, `u1`, `z2`, `rp2`, `zp:P`, `a2n:N`.
pub fn bundled(id: &str) -> Result<Presentation> {
    if let Some(m) = id.strip_prefix('s') {
        if let Ok(m) = m.parse::<usize>() {
            if (1..=9).contains(&m) {
                return Ok(sphere(m));
            }
        }
    }
    match id {
        "su2" => return Ok(su2()),
        "u1" => return Ok(u1()),
        "z2" => return Ok(z2()),
        "rp2" => return Ok(rp2()),
        _ => {}
    }
    if let Some(p) = id.strip_prefix("zp:") {
        let p: u32 = p
            .parse()
            .map_err(|_| Error::UnknownAlgebra(id.to_string()))?;
        if p >= 2 {
            return Ok(zp(p));
        }
    }
    if let Some(n) = id.strip_prefix("a2n:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::UnknownAlgebra(id.to_string()))?;
        if n >= 1 {
            return Ok(prolong(n));
        }
    }
    Err(Error::UnknownAlgebra(id.to_string()))
}

/// Hopf structure for the bundled Hopf algebras (`su2`, `u1`, `z2`, `zp:P`).
pub fn bundled_hopf(id: &str) -> Result<(Presentation, HopfSpec)> {
    match id {
        "su2" => return Ok((su2(), su2_hopf())),
        "u1" => return Ok((u1(), u1_hopf())),
        "z2" => return Ok((z2(), z2_hopf())),
        _ => {}
    }
    if let Some(p) = id.strip_prefix("zp:") {
        if let Ok(p) = p.parse::<u32>() {
            if p >= 2 {
                return Ok((zp(p), zp_hopf(p)));
            }
        }
    }
    Err(Error::Unsupported(format!(
        "`{id}` has no bundled Hopf structure"
    )))
}

/// Ids advertised by the command-line interface.
pub fn bundled_ids() -> &'static [&'static str] {
    &[
        "s1", "s2", "s3", "s4", "s5", "su2", "u1", "z2", "rp2", "zp:P", "a2n:N",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_counts(p: &Presentation, up_to: usize) {
        let formula = p.dim_formula.expect("bundled algebras carry a formula");
        let basis = p.basis_enumerate(up_to);
        for len in 0..=up_to {
            let got = basis.iter().filter(|w| w.len() == len).count() as u128;
            assert_eq!(
                got,
                formula.count(len),
                "algebra {} length {len}",
                p.id
            );
        }
    }

    #[test]
    fn sphere_counts_match_formula() {
        check_counts(&sphere(1), 6);
        check_counts(&sphere(2), 6);
        check_counts(&sphere(3), 5);
        check_counts(&sphere(4), 5);
        check_counts(&sphere(5), 4);
    }

    #[test]
    fn group_algebra_counts_match_formula() {
        check_counts(&su2(), 5);
        check_counts(&u1(), 6);
        check_counts(&z2(), 5);
        check_counts(&zp(2), 5);
        check_counts(&zp(5), 8);
    }

    #[test]
    fn prolongation_counts_match_formula() {
        check_counts(&prolong(1), 5);
        check_counts(&prolong(2), 4);
    }

    #[test]
    fn rp2_counts_match_formula() {
        // 1, 5, 9, 13, ...: the even-degree-part dimensions of the 2-sphere.
        check_counts(&rp2(), 4);
        let s2 = sphere(2);
        let s2_basis = s2.basis_enumerate(8);
        for len in 0..=4usize {
            let even_part = s2_basis.iter().filter(|w| w.len() == 2 * len).count() as u128;
            assert_eq!(even_part, DimFormula::Rp2.count(len), "length {len}");
        }
    }

    #[test]
    fn known_small_counts() {
        // 2-sphere: 2L+1 normal words of length L; su2: (L+1)^2.
        assert_eq!(DimFormula::Sphere { n: 1, even: true }.count(2), 5);
        assert_eq!(DimFormula::Su2.count(3), 16);
        assert_eq!(DimFormula::Rp2.count(3), 13);
    }

    #[test]
    fn registry_resolves_parameterised_ids() {
        assert_eq!(bundled("s3").unwrap().id, "s3");
        assert_eq!(bundled("zp:7").unwrap().id, "zp:7");
        assert_eq!(bundled("a2n:2").unwrap().id, "a2n:2");
        assert!(bundled("zp:1").is_err());
        assert!(bundled("nope").is_err());
    }

    #[test]
    fn star_rules_are_mutually_consistent() {
        // Applying * to each rule of a bundled algebra yields an equality
        // that must itself normalise to zero.
        for id in ["s2", "s3", "s4", "s5", "su2", "rp2", "u1", "z2", "zp:3", "a2n:1", "a2n:2"] {
            let p = bundled(id).unwrap();
            for r in &p.rules {
                let lhs_star = p.star(&NCPoly::from_word(r.lhs.clone()));
                let rhs_star = p.star(&r.rhs);
                assert_eq!(lhs_star, rhs_star, "algebra {id} rule {}", p.fmt_word(&r.lhs));
            }
        }
    }

    #[test]
    fn prolongation_top_letter_eliminates() {
        let a2 = prolong(1);
        let zs = a2.resolve("zeta1*").unwrap();
        let nf = a2.normal_form_word(&Word::single(zs));
        let zeta1 = a2.resolve("zeta1").unwrap();
        let xi = a2.resolve("xi").unwrap();
        assert_eq!(nf, NCPoly::from_word(Word(vec![zeta1, xi])));
        // Star of the rule: zeta1 = xi* zeta1* -> zeta1 xi xi* -> zeta1.
        let back = a2.star(&nf);
        assert_eq!(back, NCPoly::from_gen(zeta1));
    }
}
