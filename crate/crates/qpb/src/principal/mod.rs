//! Principal comodule algebras: strong connections, cleft structures and
//! crossed products, smash products, the Miyashita–Ulbrich action, the
//! prolongation isomorphism, and non-cleftness evidence for the spheres.

pub mod cleft;
pub mod connection;
pub mod mu;
pub mod phi;
pub mod smash;

pub use cleft::CrossedData;
pub use connection::{
    cleft_cotensor, from_cleaving, from_section, prolong, sphere_antipodal, Bundle,
    StrongConnection,
};
pub use mu::MuContext;
pub use phi::PhiMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ncalg::catalog;
use crate::ncalg::morphism::solve_right_inverse;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::presentation::Presentation;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::Word;
use crate::report::CheckRecord;

/// A random element supported on odd-parity basis words of length ≤ max_len.
fn random_odd_poly(p: &Presentation, rng: &mut impl Rng, max_len: usize) -> NCPoly {
    let odd: Vec<Word> = p
        .basis_enumerate(max_len)
        .into_iter()
        .filter(|w| p.parity(w) == 1)
        .collect();
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let w = odd[rng.gen_range(0..odd.len())].clone();
        let mut num = rng.gen_range(-3i64..=3);
        if num == 0 {
            num = 1;
        }
        let k = rng.gen_range(-2i64..=2);
        out.add_term(w, LaurentScalar::int_q(num, k));
    }
    p.normal_form(&out)
}

/// A cleaving for a sphere over `O(Z_2)` would make some odd-parity element
/// invertible.  This searches for right inverses of every generator, every
/// conjugate, and seeded random odd elements, up to the stated degree, and
/// passes when none exists.  Bounded-degree evidence, not a proof.
pub fn nontriviality_evidence(
    m: usize,
    max_degree: usize,
    seed: u64,
    n_random: usize,
    prefix: &str,
) -> Vec<CheckRecord> {
    let p = catalog::sphere(m);
    let mut out = Vec::new();

    let mut letters_ok = Ok(());
    for g in p.letters() {
        if p.parity(&Word::single(g)) != 1 {
            continue;
        }
        let x = NCPoly::from_gen(g);
        if let Some(y) = solve_right_inverse(&x, &p, max_degree) {
            letters_ok = Err(format!("{} . ( {} ) = 1", p.fmt_gen(g), p.fmt_poly(&y)));
            break;
        }
    }
    out.push(
        CheckRecord::from_bool(
            format!("{prefix}.letters"),
            "no generator or conjugate has a right inverse at bounded degree",
            letters_ok.is_ok(),
            || letters_ok.as_ref().err().cloned().unwrap_or_default(),
        )
        .with_bounded_degree(max_degree as u32),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seeded_ok = Ok(());
    let mut drawn = 0usize;
    while drawn < n_random {
        let x = random_odd_poly(&p, &mut rng, 3);
        if x.is_zero() {
            continue;
        }
        drawn += 1;
        if let Some(y) = solve_right_inverse(&x, &p, max_degree) {
            seeded_ok = Err(format!(
                "( {} ) . ( {} ) = 1",
                p.fmt_poly(&x),
                p.fmt_poly(&y)
            ));
            break;
        }
    }
    out.push(
        CheckRecord::from_bool(
            format!("{prefix}.seeded"),
            "no seeded random odd-parity element has a right inverse at bounded degree",
            seeded_ok.is_ok(),
            || seeded_ok.as_ref().err().cloned().unwrap_or_default(),
        )
        .with_bounded_degree(max_degree as u32)
        .with_witness(format!("{n_random} elements, seed {seed}")),
    );

    out
}

/// The same search applied where inverses do exist: the grouplike circle
/// and parity generators.  Guards the evidence above against a search that
/// could never find anything.
pub fn invertibility_controls(max_degree: usize, prefix: &str) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for (id, p) in [("u1", catalog::u1()), ("z2", catalog::z2())] {
        let g = NCPoly::from_gen(crate::ncalg::word::Gen::new(0));
        let found = solve_right_inverse(&g, &p, max_degree);
        out.push(
            CheckRecord::from_bool(
                format!("{prefix}.control.{id}"),
                "the control grouplike generator is invertible and the search finds it",
                found.is_some(),
                || "no right inverse found for an invertible element".to_string(),
            )
            .with_bounded_degree(max_degree as u32),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_generators_lack_inverses_and_controls_have_them() {
        for rec in nontriviality_evidence(2, 4, 7, 3, "t") {
            assert!(rec.passed(), "{} fails: {:?}", rec.id, rec.witness);
        }
        for rec in invertibility_controls(4, "t") {
            assert!(rec.passed(), "{} fails: {:?}", rec.id, rec.witness);
        }
    }

    #[test]
    fn a_rigged_invertible_candidate_is_caught() {
        // In O(Z_2) the generator u is its own inverse; the search must see it.
        let p = catalog::z2();
        let u = NCPoly::from_gen(crate::ncalg::word::Gen::new(0));
        let inv = solve_right_inverse(&u, &p, 2).expect("u is invertible");
        assert_eq!(p.multiply(&u, &inv), NCPoly::one());
    }
}
