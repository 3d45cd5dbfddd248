//! Randomized confluence and consistency probes for presentations.
//!
//! The graded dimension counts are the decisive signal: a non-confluent or
//! non-terminating orientation of the defining relations changes the number
//! of normal words in some degree.  Seeded random products then exercise
//! associativity and the star anti-homomorphism through the rewriter.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::Word;

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub id: String,
    pub max_len: usize,
    pub trials: usize,
    /// Per word length: enumerated count and the closed-form count, if any.
    pub counts: Vec<(usize, u128, Option<u128>)>,
    pub count_mismatches: usize,
    pub assoc_failures: usize,
    pub star_failures: usize,
    pub stability_failures: usize,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.count_mismatches == 0
            && self.assoc_failures == 0
            && self.star_failures == 0
            && self.stability_failures == 0
    }
}

/// A random raw (not necessarily normal) polynomial with small integer
/// times `q`-power coefficients.
pub fn random_poly(
    p: &Presentation,
    rng: &mut impl Rng,
    max_len: usize,
    max_terms: usize,
) -> NCPoly {
    let letters = p.letters();
    let n_terms = rng.gen_range(1..=max_terms);
    let mut out = NCPoly::zero();
    for _ in 0..n_terms {
        let len = rng.gen_range(0..=max_len);
        let word = Word((0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect());
        let mut num = rng.gen_range(-3i64..=3);
        if num == 0 {
            num = 1;
        }
        let k = rng.gen_range(-2i64..=2);
        out.add_term(word, LaurentScalar::int_q(num, k));
    }
    out
}

/// A random polynomial already in normal form.
pub fn random_normal_poly(
    p: &Presentation,
    rng: &mut impl Rng,
    max_len: usize,
    max_terms: usize,
) -> NCPoly {
    p.normal_form(&random_poly(p, rng, max_len, max_terms))
}

pub fn confluence_probe(p: &Presentation, max_len: usize, trials: usize, seed: u64) -> ProbeReport {
    let mut counts = Vec::new();
    let mut count_mismatches = 0;
    for len in 0..=max_len {
        let enumerated = p.basis_enumerate(len).iter().filter(|w| w.len() == len).count() as u128;
        let formula = p.dim_formula.as_ref().map(|f| f.count(len));
        if let Some(expected) = formula {
            if expected != enumerated {
                count_mismatches += 1;
            }
        }
        counts.push((len, enumerated, formula));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assoc_failures = 0;
    let mut star_failures = 0;
    let mut stability_failures = 0;
    for _ in 0..trials {
        let a = random_poly(p, &mut rng, 3, 2);
        let b = random_poly(p, &mut rng, 3, 2);
        let c = random_poly(p, &mut rng, 2, 2);
        let ab_c = p.multiply(&p.multiply(&a, &b), &c);
        let a_bc = p.multiply(&a, &p.multiply(&b, &c));
        if ab_c != a_bc {
            assoc_failures += 1;
        }
        let star_prod = p.star(&p.multiply(&a, &b));
        let prod_star = p.multiply(&p.star(&b), &p.star(&a));
        if star_prod != prod_star {
            star_failures += 1;
        }
        let nf = p.normal_form(&a);
        if p.normal_form(&nf) != nf {
            stability_failures += 1;
        }
    }

    ProbeReport {
        id: p.id.clone(),
        max_len,
        trials,
        counts,
        count_mismatches,
        assoc_failures,
        star_failures,
        stability_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::catalog;

    #[test]
    fn bundled_presentations_pass_the_probe() {
        for id in ["s1", "s2", "s3", "s4", "su2", "u1", "z2", "rp2", "zp:3", "a2n:1", "a2n:2"] {
            let p = catalog::bundled(id).unwrap();
            let report = confluence_probe(&p, 4, 25, 7);
            assert!(report.passed(), "{id}: {report:?}");
        }
    }

    #[test]
    fn a_bad_orientation_fails_the_count_probe() {
        // Mis-orienting the circle relation (dropping one direction) leaves
        // too many normal words.
        use crate::ncalg::presentation::{GenInfo, RewriteRule};
        use crate::ncalg::word::Gen;
        let v = Gen::new(0);
        let vs = Gen::starred(0);
        let p = Presentation::new(
            "u1-broken",
            vec![GenInfo::new("v").unitary()],
            vec![RewriteRule {
                lhs: Word(vec![v, vs]),
                rhs: NCPoly::one(),
            }],
        )
        .unwrap()
        .with_dim_formula(catalog::DimFormula::U1);
        let report = confluence_probe(&p, 3, 5, 1);
        assert!(report.count_mismatches > 0);
    }

    #[test]
    fn probe_is_seed_deterministic() {
        let p = catalog::su2();
        let a = confluence_probe(&p, 3, 10, 42);
        let b = confluence_probe(&p, 3, 10, 42);
        assert_eq!(a.assoc_failures, b.assoc_failures);
        assert_eq!(a.counts, b.counts);
    }
}
