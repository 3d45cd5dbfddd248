//! Finitely presented *-algebras with an oriented, terminating rewrite
//! system.  Normal forms are computed by exhaustive leftmost reduction;
//! every rule's right-hand side is itself in normal form, which the
//! constructor validates.

use super::catalog::DimFormula;
use super::poly::NCPoly;
use super::scalar::LaurentScalar;
use super::word::{Gen, Word};
use crate::{Error, Result};
use num_traits::Signed;
use std::collections::HashMap;
use std::fmt::Write as _;

/// Metadata for one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenInfo {
    pub name: String,
    pub self_adjoint: bool,
    pub central: bool,
    pub unitary: bool,
    /// Z-degree; its parity drives the Z_2-coactions.  A starred letter
    /// carries degree of opposite sign.
    pub degree: i64,
}

impl GenInfo {
    pub fn new(name: &str) -> Self {
        GenInfo {
            name: name.to_string(),
            self_adjoint: false,
            central: false,
            unitary: false,
            degree: 1,
        }
    }

    pub fn self_adjoint(mut self) -> Self {
        self.self_adjoint = true;
        self
    }

    pub fn central(mut self) -> Self {
        self.central = true;
        self
    }

    pub fn unitary(mut self) -> Self {
        self.unitary = true;
        self
    }

    pub fn degree(mut self, d: i64) -> Self {
        self.degree = d;
        self
    }
}

/// An oriented rule `lhs -> rhs`; `rhs` is normal with respect to the
/// full rule set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Upper bound on single-word reductions per `normal_form` call.
const STEP_BUDGET: usize = 8_000_000;

#[derive(Clone, Debug)]
pub struct Presentation {
    pub id: String,
    pub gens: Vec<GenInfo>,
    pub rules: Vec<RewriteRule>,
    /// Closed-form normal-word count per length for bundled families,
    /// consumed by the confluence probe.
    pub dim_formula: Option<DimFormula>,
    /// Rule indices bucketed by the first letter of the left-hand side.
    buckets: HashMap<Gen, Vec<usize>>,
    max_lhs_len: usize,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for Presentation {}

impl Presentation {
    pub fn new(id: &str, gens: Vec<GenInfo>, rules: Vec<RewriteRule>) -> Result<Self> {
        let mut buckets: HashMap<Gen, Vec<usize>> = HashMap::new();
        let mut max_lhs_len = 0;
        for (i, r) in rules.iter().enumerate() {
            let first = *r
                .lhs
                .0
                .first()
                .ok_or_else(|| Error::Parse(format!("{id}: empty rule left-hand side")))?;
            buckets.entry(first).or_default().push(i);
            max_lhs_len = max_lhs_len.max(r.lhs.len());
        }
        let p = Presentation {
            id: id.to_string(),
            gens,
            rules,
            dim_formula: None,
            buckets,
            max_lhs_len,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_dim_formula(mut self, f: DimFormula) -> Self {
        self.dim_formula = Some(f);
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(format!("{}: {msg}", self.id)));
        let check_word = |w: &Word| -> Result<()> {
            for g in &w.0 {
                let Some(info) = self.gens.get(g.index as usize) else {
                    return bad(format!("generator index {} out of range", g.index));
                };
                if g.star && info.self_adjoint {
                    return bad(format!("starred letter on self-adjoint `{}`", info.name));
                }
            }
            Ok(())
        };
        for (i, r) in self.rules.iter().enumerate() {
            check_word(&r.lhs)?;
            for (w, _) in r.rhs.iter() {
                check_word(w)?;
                if self.find_redex(w).is_some() {
                    return bad(format!(
                        "rule {} has reducible right-hand side word `{}`",
                        i,
                        self.fmt_word(w)
                    ));
                }
            }
            // No other rule may fire inside this left-hand side; otherwise
            // the pair could never both apply and one would be dead.
            for (j, other) in self.rules.iter().enumerate() {
                if i == j || other.lhs.len() >= r.lhs.len() {
                    continue;
                }
                if r.lhs
                    .0
                    .windows(other.lhs.len())
                    .any(|win| win == other.lhs.0.as_slice())
                {
                    return bad(format!("rule {j} left-hand side occurs inside rule {i}"));
                }
            }
        }
        Ok(())
    }

    // ---- generators ----

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_info(&self, g: Gen) -> &GenInfo {
        &self.gens[g.index as usize]
    }

    /// Resolve a display name, with a trailing `*` selecting the star.
    pub fn resolve(&self, name: &str) -> Result<Gen> {
        let (base, star) = match name.strip_suffix('*') {
            Some(b) => (b, true),
            None => (name, false),
        };
        let idx = self
            .gens
            .iter()
            .position(|g| g.name == base)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        if star && self.gens[idx].self_adjoint {
            return Ok(Gen::new(idx as u16));
        }
        Ok(Gen {
            index: idx as u16,
            star,
        })
    }

    /// All letters in enumeration order: per index, unstarred then starred.
    pub fn letters(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for (i, info) in self.gens.iter().enumerate() {
            out.push(Gen::new(i as u16));
            if !info.self_adjoint {
                out.push(Gen::starred(i as u16));
            }
        }
        out
    }

    pub fn star_gen(&self, g: Gen) -> Gen {
        if self.gens[g.index as usize].self_adjoint {
            Gen::new(g.index)
        } else {
            Gen {
                index: g.index,
                star: !g.star,
            }
        }
    }

    /// Star of a word: reverse and star each letter (not normalised).
    pub fn star_word(&self, w: &Word) -> Word {
        Word(w.0.iter().rev().map(|g| self.star_gen(*g)).collect())
    }

    /// Star of a polynomial, normalised.  Coefficients are fixed: they are
    /// real polynomials in the real parameter `q`.
    pub fn star(&self, p: &NCPoly) -> NCPoly {
        let raw = NCPoly::from_terms(p.iter().map(|(w, c)| (self.star_word(w), c.clone())));
        self.normal_form(&raw)
    }

    /// Z_2-parity of a word under the grading.
    pub fn parity(&self, w: &Word) -> u8 {
        (w.0
            .iter()
            .map(|g| self.gens[g.index as usize].degree.rem_euclid(2))
            .sum::<i64>()
            % 2) as u8
    }

    /// Signed total degree (star negates); for a group-like circle
    /// generator this is the winding charge.
    pub fn signed_degree(&self, w: &Word) -> i64 {
        w.0.iter()
            .map(|g| {
                let d = self.gens[g.index as usize].degree;
                if g.star {
                    -d
                } else {
                    d
                }
            })
            .sum()
    }

    // ---- rewriting ----

    /// Leftmost redex: position plus rule index.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.0.len() {
            if let Some(cands) = self.buckets.get(&w.0[pos]) {
                for &ri in cands {
                    let lhs = &self.rules[ri].lhs.0;
                    if pos + lhs.len() <= w.0.len() && &w.0[pos..pos + lhs.len()] == lhs.as_slice()
                    {
                        return Some((pos, ri));
                    }
                }
            }
        }
        None
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    pub fn try_normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        // Canonicalize letters first: a starred self-adjoint generator is
        // the same letter as its plain form, so rule matching may assume
        // plain spelling throughout.
        let canon = |w: &Word| {
            Word(
                w.0.iter()
                    .map(|&g| {
                        if self.gens[g.index as usize].self_adjoint {
                            Gen::new(g.index)
                        } else {
                            g
                        }
                    })
                    .collect(),
            )
        };
        let mut agenda: Vec<(Word, LaurentScalar)> =
            p.iter().map(|(w, c)| (canon(w), c.clone())).collect();
        let mut steps = 0usize;
        while let Some((w, c)) = agenda.pop() {
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > STEP_BUDGET {
                        return Err(Error::RewriteBudget(self.id.clone()));
                    }
                    let rule = &self.rules[ri];
                    let l = rule.lhs.len();
                    for (rw, rc) in rule.rhs.iter() {
                        let mut nw = Vec::with_capacity(w.0.len() - l + rw.0.len());
                        nw.extend_from_slice(&w.0[..pos]);
                        nw.extend_from_slice(&rw.0);
                        nw.extend_from_slice(&w.0[pos + l..]);
                        agenda.push((Word(nw), &c * rc));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form; panics on budget exhaustion (bundled rule sets
    /// terminate, user files go through [`Presentation::try_normal_form`]).
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        self.try_normal_form(p)
            .expect("rewrite step budget exceeded")
    }

    pub fn normal_form_word(&self, w: &Word) -> NCPoly {
        self.normal_form(&NCPoly::from_word(w.clone()))
    }

    pub fn multiply(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.normal_form(&a.raw_mul(b))
    }

    pub fn multiply_all(&self, factors: &[&NCPoly]) -> NCPoly {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.multiply(&acc, f);
        }
        acc
    }

    pub fn pow(&self, p: &NCPoly, k: usize) -> NCPoly {
        let mut acc = NCPoly::one();
        for _ in 0..k {
            acc = self.multiply(&acc, p);
        }
        acc
    }

    /// Commutator test used as a guard by the untwisting map.
    pub fn is_commutative(&self) -> bool {
        let letters = self.letters();
        for (i, &x) in letters.iter().enumerate() {
            for &y in &letters[i + 1..] {
                let xy = NCPoly::from_word(Word(vec![x, y]));
                let yx = NCPoly::from_word(Word(vec![y, x]));
                if self.normal_form(&(&xy - &yx)) != NCPoly::zero() {
                    return false;
                }
            }
        }
        true
    }

    // ---- basis enumeration ----

    /// All normal words of length `<= d`, in graded order.
    pub fn basis_enumerate(&self, d: usize) -> Vec<Word> {
        let letters = self.letters();
        let mut out = vec![Word::one()];
        let mut cur: Vec<Gen> = Vec::new();
        self.extend_basis(&letters, d, &mut cur, &mut out);
        out.sort();
        out
    }

    fn extend_basis(&self, letters: &[Gen], d: usize, cur: &mut Vec<Gen>, out: &mut Vec<Word>) {
        if cur.len() == d {
            return;
        }
        for &g in letters {
            cur.push(g);
            if !self.suffix_redex(cur) {
                out.push(Word(cur.clone()));
                self.extend_basis(letters, d, cur, out);
            }
            cur.pop();
        }
    }

    /// Does some rule match a suffix ending at the last letter?  The
    /// prefix is normal by construction, so this decides normality.
    fn suffix_redex(&self, w: &[Gen]) -> bool {
        let n = w.len();
        for l in 1..=self.max_lhs_len.min(n) {
            let suffix = &w[n - l..];
            if let Some(cands) = self.buckets.get(&suffix[0]) {
                for &ri in cands {
                    if self.rules[ri].lhs.0.as_slice() == suffix {
                        return true;
                    }
                }
            }
        }
        false
    }

    // ---- display ----

    pub fn fmt_gen(&self, g: Gen) -> String {
        let name = &self.gens[g.index as usize].name;
        if g.star {
            format!("{name}*")
        } else {
            name.clone()
        }
    }

    /// Space-separated letters with powers collapsed; the empty word is `1`.
    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_one() {
            return "1".to_string();
        }
        let mut pieces: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.0.len() {
            let g = w.0[i];
            let mut k = 1;
            while i + k < w.0.len() && w.0[i + k] == g {
                k += 1;
            }
            if k == 1 {
                pieces.push(self.fmt_gen(g));
            } else {
                pieces.push(format!("{}^{}", self.fmt_gen(g), k));
            }
            i += k;
        }
        pieces.join(" ")
    }

    pub fn fmt_poly(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in p.iter().enumerate() {
            // A single-term scalar prints inline; anything else in parens.
            let (neg, body) = match c.as_monomial() {
                Some((_, r)) if r.is_negative() => (true, (-c).to_string()),
                Some(_) => (false, c.to_string()),
                None => (false, format!("({c})")),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coef_is_unit = body == "1";
            if w.is_one() {
                s.push_str(&body);
            } else if coef_is_unit {
                s.push_str(&self.fmt_word(w));
            } else {
                let _ = write!(s, "{} {}", body, self.fmt_word(w));
            }
        }
        s
    }

    // ---- text format ----

    /// Serialise to the declarative text format read by [`parse_presentation`].
    pub fn to_text(&self, hopf: Option<&HopfSpec>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra {}", self.id);
        for g in &self.gens {
            let mut line = format!("gen {} degree={}", g.name, g.degree);
            if g.self_adjoint {
                line.push_str(" self_adjoint");
            }
            if g.central {
                line.push_str(" central");
            }
            if g.unitary {
                line.push_str(" unitary");
            }
            let _ = writeln!(s, "{line}");
        }
        for r in &self.rules {
            let _ = writeln!(
                s,
                "rule {} -> {}",
                self.fmt_word_plain(&r.lhs),
                self.fmt_rhs(&r.rhs)
            );
        }
        if let Some(h) = hopf {
            for (g, terms) in &h.coproduct {
                let body = terms
                    .iter()
                    .map(|(c, w1, w2)| {
                        format!(
                            "({c}) {} , {}",
                            self.fmt_word_plain(w1),
                            self.fmt_word_plain(w2)
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" + ");
                let _ = writeln!(s, "coproduct {} -> {}", self.fmt_gen(*g), body);
            }
            for (g, c) in &h.counit {
                let _ = writeln!(s, "counit {} -> ({c})", self.fmt_gen(*g));
            }
            for (g, p) in &h.antipode {
                let _ = writeln!(s, "antipode {} -> {}", self.fmt_gen(*g), self.fmt_rhs(p));
            }
            for (g, p) in &h.antipode_inv {
                let _ = writeln!(s, "antipode_inv {} -> {}", self.fmt_gen(*g), self.fmt_rhs(p));
            }
        }
        s
    }

    /// Letters without power collapsing, for the file format.
    fn fmt_word_plain(&self, w: &Word) -> String {
        if w.is_one() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|g| self.fmt_gen(*g))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn fmt_rhs(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "(0)".to_string();
        }
        p.iter()
            .map(|(w, c)| {
                if w.is_one() {
                    format!("({c})")
                } else {
                    format!("({c}) {}", self.fmt_word_plain(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Hopf structure data as read from a presentation file; the `hopf`
/// module turns this into evaluated maps.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HopfSpec {
    pub coproduct: Vec<(Gen, Vec<(LaurentScalar, Word, Word)>)>,
    pub counit: Vec<(Gen, LaurentScalar)>,
    pub antipode: Vec<(Gen, NCPoly)>,
    pub antipode_inv: Vec<(Gen, NCPoly)>,
}

/// Split at top-level occurrences of `sep` (parenthesis depth 0).
fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            c if c == sep && depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(ch),
        }
    }
    out.push(cur.trim().to_string());
    out
}

struct PendingPresentation {
    id: Option<String>,
    gens: Vec<GenInfo>,
    rules: Vec<(String, String)>,
    hopf_lines: Vec<(String, String, String)>, // section, letter, body
}

/// Parse the declarative presentation format (optionally with Hopf
/// sections).  See `presentations/*.alg` for examples.
pub fn parse_presentation(text: &str) -> Result<(Presentation, Option<HopfSpec>)> {
    let mut pend = PendingPresentation {
        id: None,
        gens: Vec::new(),
        rules: Vec::new(),
        hopf_lines: Vec::new(),
    };
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", ln + 1));
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "algebra" => pend.id = Some(rest.to_string()),
            "gen" => {
                let mut it = rest.split_whitespace();
                let name = it.next().ok_or_else(|| err("missing generator name"))?;
                let mut info = GenInfo::new(name);
                for tok in it {
                    if let Some(d) = tok.strip_prefix("degree=") {
                        info.degree = d
                            .parse()
                            .map_err(|_| err("bad degree"))?;
                    } else {
                        match tok {
                            "self_adjoint" => info.self_adjoint = true,
                            "central" => info.central = true,
                            "unitary" => info.unitary = true,
                            _ => return Err(err(&format!("unknown flag `{tok}`"))),
                        }
                    }
                }
                pend.gens.push(info);
            }
            "rule" => {
                let (lhs, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| err("rule missing `->`"))?;
                pend.rules.push((lhs.trim().to_string(), rhs.trim().to_string()));
            }
            "coproduct" | "counit" | "antipode" | "antipode_inv" => {
                let (letter, body) = rest
                    .split_once("->")
                    .ok_or_else(|| err("missing `->`"))?;
                pend.hopf_lines.push((
                    kw.to_string(),
                    letter.trim().to_string(),
                    body.trim().to_string(),
                ));
            }
            _ => return Err(err(&format!("unknown keyword `{kw}`"))),
        }
    }

    let id = pend
        .id
        .ok_or_else(|| Error::Parse("missing `algebra` line".into()))?;
    // A temporary rule-free presentation resolves names while parsing.
    let names = Presentation::new(&id, pend.gens.clone(), Vec::new())?;
    let parse_word = |s: &str| -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::one());
        }
        let mut gens = Vec::new();
        for tok in s.split_whitespace() {
            gens.push(names.resolve(tok)?);
        }
        Ok(Word(gens))
    };
    let parse_rhs = |s: &str| -> Result<NCPoly> {
        let mut p = NCPoly::zero();
        for term in split_top_level(s, '+') {
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let inner = term
                .strip_prefix('(')
                .and_then(|t| t.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("term `{term}` missing (scalar)")))?;
            let c = crate::expr::parse_scalar(inner.0)?;
            let w = if inner.1.trim().is_empty() {
                Word::one()
            } else {
                parse_word(inner.1)?
            };
            p.add_term(w, c);
        }
        Ok(p)
    };

    let mut rules = Vec::new();
    for (lhs, rhs) in &pend.rules {
        rules.push(RewriteRule {
            lhs: parse_word(lhs)?,
            rhs: parse_rhs(rhs)?,
        });
    }
    let pres = Presentation::new(&id, pend.gens, rules)?;

    let hopf = if pend.hopf_lines.is_empty() {
        None
    } else {
        let mut spec = HopfSpec::default();
        for (section, letter, body) in &pend.hopf_lines {
            let g = pres.resolve(letter)?;
            match section.as_str() {
                "coproduct" => {
                    let mut terms = Vec::new();
                    for term in split_top_level(body, '+') {
                        let inner = term
                            .strip_prefix('(')
                            .and_then(|t| t.split_once(')'))
                            .ok_or_else(|| {
                                Error::Parse(format!("coproduct term `{term}` missing (scalar)"))
                            })?;
                        let c = crate::expr::parse_scalar(inner.0)?;
                        let legs = split_top_level(inner.1, ',');
                        if legs.len() != 2 {
                            return Err(Error::Parse(format!(
                                "coproduct term `{term}` needs two legs"
                            )));
                        }
                        terms.push((c, parse_word(&legs[0])?, parse_word(&legs[1])?));
                    }
                    spec.coproduct.push((g, terms));
                }
                "counit" => {
                    let inner = body
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(|| Error::Parse(format!("counit `{body}` not (scalar)")))?;
                    spec.counit.push((g, crate::expr::parse_scalar(inner)?));
                }
                "antipode" => spec.antipode.push((g, parse_rhs(body)?)),
                "antipode_inv" => spec.antipode_inv.push((g, parse_rhs(body)?)),
                _ => unreachable!(),
            }
        }
        Some(spec)
    };

    Ok((pres, hopf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::catalog;

    // ---- rewriting on the even 2-sphere ----

    #[test]
    fn commutation_rule_matches_hand_reduction() {
        let s3 = catalog::bundled("s3").unwrap();
        let z0 = s3.resolve("z0").unwrap();
        let z1 = s3.resolve("z1").unwrap();
        let p = NCPoly::from_word(Word(vec![z1, z0]));
        let nf = s3.normal_form(&p);
        let expect = NCPoly::from_term(Word(vec![z0, z1]), LaurentScalar::q_pow(-1));
        assert_eq!(nf, expect, "z1 z0 -> q^-1 z0 z1");
    }

    #[test]
    fn sphere_relation_sums_to_unit() {
        // z0 z0* + z1 z1* -> 1 on the 2-sphere (z1 self-adjoint).
        let s2 = catalog::bundled("s2").unwrap();
        let z0 = s2.resolve("z0").unwrap();
        let z0s = s2.resolve("z0*").unwrap();
        let z1 = s2.resolve("z1").unwrap();
        let mut p = NCPoly::from_word(Word(vec![z0, z0s]));
        p += &NCPoly::from_word(Word(vec![z1, z1]));
        assert!(s2.normal_form(&p).is_one());
    }

    #[test]
    fn multiply_reduces_same_index_pair() {
        // Hand reduction: z0 z0* = 1 - z1^2 on the 2-sphere, and the
        // reflection form z0* z0 + (q^-2 - 1) z1^2 agrees with it.
        let s2 = catalog::bundled("s2").unwrap();
        let z0 = NCPoly::from_gen(s2.resolve("z0").unwrap());
        let z0s = NCPoly::from_gen(s2.resolve("z0*").unwrap());
        let z1 = NCPoly::from_gen(s2.resolve("z1").unwrap());
        let prod = s2.multiply(&z0, &z0s);
        let z1_sq = s2.multiply(&z1, &z1);
        let direct = &NCPoly::one() - &z1_sq;
        assert_eq!(prod, direct);
        let reflect = &s2.multiply(&z0s, &z0)
            + &z1_sq.scale(&(LaurentScalar::q_pow(-2) - LaurentScalar::one()));
        assert_eq!(prod, reflect);
    }

    #[test]
    fn su2_product_hand_oracle() {
        // Hand reduction: a (a* a) = (a a*) a = a - q^-2 a b b*.
        let su2 = catalog::bundled("su2").unwrap();
        let a = NCPoly::from_gen(su2.resolve("a").unwrap());
        let astar = NCPoly::from_gen(su2.resolve("a*").unwrap());
        let lhs = su2.multiply(&a, &su2.multiply(&astar, &a));
        let b = su2.resolve("b").unwrap();
        let bs = su2.resolve("b*").unwrap();
        let abbs = Word(vec![su2.resolve("a").unwrap(), b, bs]);
        let mut expect = NCPoly::from_gen(su2.resolve("a").unwrap());
        expect.add_term(abbs, -LaurentScalar::q_pow(-2));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn star_is_an_antihomomorphism() {
        // Hand application of the relations: (z0 z1)* = z1* z0* = q z0* z1*.
        let s3 = catalog::bundled("s3").unwrap();
        let z0 = s3.resolve("z0").unwrap();
        let z1 = s3.resolve("z1").unwrap();
        let p = NCPoly::from_word(Word(vec![z0, z1]));
        let starred = s3.star(&p);
        let expect = NCPoly::from_term(
            Word(vec![s3.star_gen(z0), s3.star_gen(z1)]),
            LaurentScalar::q_pow(1),
        );
        assert_eq!(starred, expect);
        // Involution.
        assert_eq!(s3.star(&starred), s3.normal_form(&p));
    }

    #[test]
    fn basis_enumeration_matches_combinatorial_count() {
        let s2 = catalog::bundled("s2").unwrap();
        let basis = s2.basis_enumerate(2);
        // Normal words of length <= 2: 1; z0, z0*, z1; z0^2, z0 z1,
        // z0*^2, z0* z1, z1^2 — the same-index products reduce.
        assert_eq!(basis.len(), 9);
        let z0 = s2.resolve("z0").unwrap();
        let z0s = s2.resolve("z0*").unwrap();
        assert!(!basis.contains(&Word(vec![z0, z0s])));
        assert!(!basis.contains(&Word(vec![z0s, z0])));
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let s3 = catalog::bundled("s3").unwrap();
        let z0 = s3.resolve("z0").unwrap();
        let z1 = s3.resolve("z1").unwrap();
        let p = NCPoly::from_term(Word(vec![z0, z1]), LaurentScalar::q_pow(-1));
        assert_eq!(s3.fmt_poly(&p), "q^-1 z0 z1");
        let text = s3.to_text(None);
        let (reparsed, hopf) = parse_presentation(&text).unwrap();
        assert!(hopf.is_none());
        assert_eq!(reparsed.to_text(None), text);
    }
}
