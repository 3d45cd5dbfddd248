//! The smash action `h |> x = f(h_(1)) x f(S(h_(2)))` induced by an
//! algebra map `f`, the measuring law, and the smash-product comparison
//! with the crossed product.

use crate::hopf::maps::HLinMap;
use crate::hopf::tensor::Tensor;
use crate::ncalg::poly::NCPoly;
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::Gen;
use crate::principal::cleft::CrossedData;
use crate::report::CheckRecord;

/// `h |> x = f(h_(1)) x f(S(h_(2)))` for `h` in `H`, `x` in the target
/// algebra of `f`.
pub fn smash_action(h: &NCPoly, x: &NCPoly, f: &HLinMap) -> NCPoly {
    let target = f.target.clone();
    let mut out = NCPoly::zero();
    for (legs, c) in f.source.coproduct(h).terms() {
        let left = f.apply_word(&legs[0]);
        let right = f.apply(&f.source.antipode_word(&legs[1]));
        out = &out + &target.multiply_all(&[&left, x, &right]).scale(c);
    }
    out
}

/// `(x (x) h)(y (x) g) = x (h_(1) |> y) (x) h_(2) g` on `Abar (x) H`.
pub fn smash_multiply(x: &Tensor, y: &Tensor, f: &HLinMap) -> Tensor {
    let target = f.target.clone();
    let legs = x.legs().to_vec();
    let mut out = Tensor::zero(legs);
    for (xw, xc) in x.terms() {
        for (yw, yc) in y.terms() {
            let dh = f.source.coproduct_word(&xw[1]);
            for (hs, hc) in dh.terms() {
                let acted = smash_action(
                    &NCPoly::from_word(hs[0].clone()),
                    &NCPoly::from_word(yw[0].clone()),
                    f,
                );
                let first = target.multiply(&NCPoly::from_word(xw[0].clone()), &acted);
                let second = hs[1].concat(&yw[1]);
                let coeff = &(xc * yc) * hc;
                for (fw, fc) in first.iter() {
                    out.add_term(vec![fw.clone(), second.clone()], &coeff * fc);
                }
            }
        }
    }
    out
}

/// Measuring law `h |> (xy) = (h_(1) |> x)(h_(2) |> y)` and unitality
/// `h |> 1 = epsilon(h) 1` on sampled elements.
pub fn verify_measuring(
    f: &HLinMap,
    d_h: usize,
    d_x: usize,
    prefix: &str,
) -> Vec<CheckRecord> {
    let target = f.target.clone();
    let h_words = f.source.algebra.basis_enumerate(d_h);
    let x_words = target.basis_enumerate(d_x);
    let mut measuring = Ok(());
    let mut unital = Ok(());
    for hw in &h_words {
        let h = NCPoly::from_word(hw.clone());
        if unital.is_ok() {
            let lhs = smash_action(&h, &NCPoly::one(), f);
            if lhs != NCPoly::scalar(f.source.counit_word(hw)) {
                unital = Err(f.source.algebra.fmt_word(hw));
            }
        }
        if measuring.is_err() {
            continue;
        }
        'outer: for xw in &x_words {
            for yw in &x_words {
                let x = NCPoly::from_word(xw.clone());
                let y = NCPoly::from_word(yw.clone());
                let lhs = smash_action(&h, &target.multiply(&x, &y), f);
                let mut rhs = NCPoly::zero();
                for (legs, c) in f.source.coproduct(&h).terms() {
                    let hx = smash_action(&NCPoly::from_word(legs[0].clone()), &x, f);
                    let hy = smash_action(&NCPoly::from_word(legs[1].clone()), &y, f);
                    rhs = &rhs + &target.multiply(&hx, &hy).scale(c);
                }
                if lhs != rhs {
                    measuring = Err(format!(
                        "h={}, x={}, y={}",
                        f.source.algebra.fmt_word(hw),
                        target.fmt_word(xw),
                        target.fmt_word(yw)
                    ));
                    break 'outer;
                }
            }
        }
    }
    vec![
        CheckRecord::from_bool(
            format!("{prefix}.measuring"),
            "h |> (xy) = (h_(1) |> x)(h_(2) |> y)",
            measuring.is_ok(),
            || format!("fails at {}", measuring.as_ref().err().cloned().unwrap_or_default()),
        )
        .with_bounded_degree(d_h as u32),
        CheckRecord::from_bool(
            format!("{prefix}.unital"),
            "h |> 1 = epsilon(h) 1",
            unital.is_ok(),
            || format!("fails at {}", unital.as_ref().err().cloned().unwrap_or_default()),
        )
        .with_bounded_degree(d_h as u32),
    ]
}

/// The six displayed actions of `a` and `b` on the generators `P`, `R`,
/// `T` of the base, as (name, actor, target, expected-value) tuples; the
/// expected values are polynomials in the base generators expanded inside
/// the equator sphere.
pub fn generator_action_table(f: &HLinMap) -> Vec<(String, NCPoly, NCPoly, NCPoly)> {
    let s2 = f.target.clone();
    let (p, r, t) = crate::comod::rp2_generator_images();
    let a = NCPoly::from_gen(Gen::new(0));
    let b = NCPoly::from_gen(Gen::new(1));
    let q = LaurentScalar::q_pow;
    let one = LaurentScalar::one();
    // 1 - q^2 as a reusable factor.
    let omq2 = &one - &q(2);
    let pp = s2.multiply(&p, &p);
    let pt = s2.multiply(&p, &t);
    let pr = s2.multiply(&p, &r);
    let tr = s2.multiply(&t, &r);
    let tt = s2.multiply(&t, &t);
    vec![
        (
            "a |> P = q^2 P + q^2(1-q^2) P^2".into(),
            a.clone(),
            p.clone(),
            &p.scale(&q(2)) + &pp.scale(&(&q(2) * &omq2)),
        ),
        (
            "b |> P = q(1-q^2) P T".into(),
            b.clone(),
            p.clone(),
            pt.scale(&(&q(1) * &omq2)),
        ),
        (
            "a |> R = R + q^4(1-q^2) P R".into(),
            a.clone(),
            r.clone(),
            &r + &pr.scale(&(&q(4) * &omq2)),
        ),
        (
            "b |> R = q(1-q^2) T R".into(),
            b.clone(),
            r.clone(),
            tr.scale(&(&q(1) * &omq2)),
        ),
        (
            "a |> T = q T + q^3(1-q^2) P T".into(),
            a,
            t.clone(),
            &t.scale(&q(1)) + &pt.scale(&(&q(3) * &omq2)),
        ),
        (
            "b |> T = (1-q^2) T^2".into(),
            b,
            t,
            tt.scale(&omq2),
        ),
    ]
}

/// Checks all six displayed generator actions exactly.
pub fn verify_generator_actions(f: &HLinMap, prefix: &str) -> Vec<CheckRecord> {
    generator_action_table(f)
        .into_iter()
        .enumerate()
        .map(|(k, (law, h, x, expect))| {
            let got = smash_action(&h, &x, f);
            CheckRecord::from_bool(format!("{prefix}.formula[{k}]"), law.clone(), got == expect, || {
                format!("got {}", f.target.fmt_poly(&got))
            })
        })
        .collect()
}

/// When `f` is an algebra map the crossed product collapses to the smash
/// product; compares both on sampled pairs.
pub fn verify_crossed_equals_smash(
    cd: &CrossedData,
    pairs: &[(Tensor, Tensor)],
    prefix: &str,
) -> CheckRecord {
    let mut bad = Ok(());
    for (x, y) in pairs {
        if cd.crossed_multiply(x, y) != smash_multiply(x, y, &cd.f) {
            bad = Err(format!("{} times {}", x.fmt(), y.fmt()));
            break;
        }
    }
    CheckRecord::from_bool(
        format!("{prefix}.crossed_equals_smash"),
        "b f(h_(1)) c f(g_(1)) f^{-1}(h_(2)g_(2)) (x) h_(3)g_(3) = b (h_(1) |> c) (x) h_(2) g",
        bad.is_ok(),
        || format!("fails at {}", bad.as_ref().err().cloned().unwrap_or_default()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::maps;
    use crate::hopf::structure::HopfAlgebra;
    use crate::ncalg::word::Word;

    fn f2_map() -> HLinMap {
        let su2 = HopfAlgebra::bundled("su2").unwrap();
        HLinMap::from_morphism(su2, maps::f2()).unwrap()
    }

    #[test]
    fn all_six_generator_actions_hold() {
        let f = f2_map();
        for r in verify_generator_actions(&f, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.law, r.witness);
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let f = f2_map();
        let (p, _, _) = crate::comod::rp2_generator_images();
        assert_eq!(smash_action(&NCPoly::one(), &p, &f), p);
    }

    #[test]
    fn measuring_law_holds_at_low_degree() {
        let f = f2_map();
        for r in verify_measuring(&f, 1, 1, "t") {
            assert!(r.passed(), "{} fails: {:?}", r.id, r.witness);
        }
    }

    #[test]
    fn crossed_product_reduces_to_smash_on_the_worked_example() {
        let cd = CrossedData::sphere_example().unwrap();
        let (p, _, _) = crate::comod::rp2_generator_images();
        // x = 1 (x) a, y = P (x) 1.
        let mut x = Tensor::zero(cd.legs());
        x.add_term(vec![Word::one(), Word::single(Gen::new(0))], LaurentScalar::one());
        let mut y = Tensor::zero(cd.legs());
        for (w, c) in p.iter() {
            y.add_term(vec![w.clone(), Word::one()], c.clone());
        }
        let prod = cd.crossed_multiply(&x, &y);
        // Expected: (a |> P) (x) a + (b |> P) (x) (-q^{-1} b*).
        let a = NCPoly::from_gen(Gen::new(0));
        let b = NCPoly::from_gen(Gen::new(1));
        let ap = smash_action(&a, &p, &cd.f);
        let bp = smash_action(&b, &p, &cd.f);
        let mut expect = Tensor::zero(cd.legs());
        for (w, c) in ap.iter() {
            expect.add_term(vec![w.clone(), Word::single(Gen::new(0))], c.clone());
        }
        for (w, c) in bp.iter() {
            expect.add_term(
                vec![w.clone(), Word::single(Gen::starred(1))],
                c * &-LaurentScalar::q_pow(-1),
            );
        }
        assert_eq!(prod, expect);
        assert_eq!(prod, smash_multiply(&x, &y, &cd.f));
        let r = verify_crossed_equals_smash(&cd, &[(x, y)], "t");
        assert!(r.passed());
    }
}
