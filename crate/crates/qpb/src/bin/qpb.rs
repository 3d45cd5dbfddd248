//! Command-line front end: expression normalization, basis and cotensor
//! enumeration, graded-character traces, and the named verification
//! suites.  JSON goes to stdout, a human summary to stderr; the exit code
//! is 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use qpb::expr;
use qpb::fredholm::FredholmModule;
use qpb::hopf::structure::HopfAlgebra;
use qpb::ncalg::catalog;
use qpb::report::Report;
use qpb::suites::{run_suite, suite_names, RunConfig};
use qpb::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qpb",
    version,
    about = "Exact verification toolkit for quantum-sphere principal bundles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CfgArgs {
    /// Basis-enumeration degree for the symbolic checks.
    #[arg(long, default_value_t = 3)]
    degree: usize,
    /// Deformation parameter, 0 < q < 1.
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    /// Phase of the generic representation family.
    #[arg(long, default_value_t = 0.3)]
    phi: f64,
    /// Fock-space cutoff (each suite's default when omitted).
    #[arg(long)]
    cutoff: Option<usize>,
    /// Boundary margin excluded from relation residuals.
    #[arg(long, default_value_t = 4)]
    margin: usize,
    /// Seed for the randomized samples.
    #[arg(long, default_value_t = 17)]
    seed: u64,
}

impl CfgArgs {
    fn to_config(&self) -> RunConfig {
        RunConfig {
            degree: self.degree,
            q: self.q,
            phi: self.phi,
            cutoff: self.cutoff,
            margin: self.margin,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Normalize an expression over a bundled algebra.
    Normalize {
        /// Algebra id: s1..s9, su2, u1, z2, rp2, zp:P, a2n:N.
        #[arg(long)]
        algebra: String,
        /// Expression, e.g. "z1 z0" or "q^2 z0* (z1 + 1)".
        expr: String,
    },
    /// Enumerate the normal words up to a degree.
    Basis {
        /// Algebra id: s1..s9, su2, u1, z2, rp2, zp:P, a2n:N.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Basis of the cotensor of a sphere with a covering Hopf algebra.
    Cotensor {
        /// Sphere dimension m.
        #[arg(long)]
        sphere: usize,
        /// Covering Hopf algebra: u1 or su2.
        #[arg(long, default_value = "u1")]
        hopf: String,
        /// Bound on both tensor legs.
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Graded-character trace of an expression in a prolonged algebra.
    Trace {
        /// Expression over a2n:N, e.g. "zeta1 xi" or "zeta0 zeta1 zeta0*".
        #[arg(long)]
        monomial: String,
        /// Prolongation index N of a2n:N.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 60)]
        cutoff: usize,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Run a named verification suite and print its report.
    Verify {
        /// One of: hopf, comodule, connections, cleft, prolong, smash,
        /// phi, mu, reps, fredholm, all.
        suite: String,
        #[command(flatten)]
        cfg: CfgArgs,
        /// Write the JSON report to this file instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Verify one Fredholm module directly.
    FredholmVerify {
        /// Prolongation index N of a2n:N.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        cfg: CfgArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Normalize { algebra, expr: s } => {
            let p = catalog::bundled(&algebra)?;
            let poly = expr::parse_poly(&s, &p)?;
            let nf = p.normal_form(&poly);
            println!(
                "{}",
                serde_json::json!({
                    "algebra": p.id,
                    "input": s,
                    "normal_form": p.fmt_poly(&nf),
                    "terms": nf.num_terms(),
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Basis { algebra, degree } => {
            let p = catalog::bundled(&algebra)?;
            let words: Vec<String> = p
                .basis_enumerate(degree)
                .iter()
                .map(|w| p.fmt_word(w))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "algebra": p.id,
                    "degree": degree,
                    "count": words.len(),
                    "words": words,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cotensor {
            sphere,
            hopf,
            degree,
        } => {
            let (h, pi) = match hopf.as_str() {
                "u1" => (HopfAlgebra::bundled("u1")?, qpb::hopf::maps::pi2()),
                "su2" => (
                    HopfAlgebra::bundled("su2")?,
                    qpb::hopf::maps::pi_su2_z2(),
                ),
                other => {
                    return Err(Error::Unsupported(format!(
                        "no bundled covering for `{other}`; use u1 or su2"
                    )))
                }
            };
            let cot = qpb::comod::sphere_cotensor(sphere, h, pi)?;
            let legs = cot.legs();
            let pairs: Vec<String> = cot
                .basis(degree, degree)?
                .iter()
                .map(|(wa, wh)| format!("{} (x) {}", legs[0].fmt_word(wa), legs[1].fmt_word(wh)))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "sphere": format!("s{sphere}"),
                    "hopf": hopf,
                    "degree": degree,
                    "count": pairs.len(),
                    "pairs": pairs,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Trace {
            monomial,
            n,
            cutoff,
            q,
            phi,
        } => {
            let p = catalog::bundled(&format!("a2n:{n}"))?;
            let poly = p.normal_form(&expr::parse_poly(&monomial, &p)?);
            let fm = FredholmModule::new(n, cutoff, q, phi);
            let mut total = Complex64::new(0.0, 0.0);
            let mut total_bound = 0.0f64;
            let mut terms = Vec::new();
            for (w, c) in poly.iter() {
                let tau = fm.tau_word(w);
                let (balanced, top) = fm.selection(w);
                let coeff = c.eval(q);
                let bound = fm.tail_bound(top);
                total += tau * coeff;
                total_bound += bound * coeff.abs();
                terms.push(serde_json::json!({
                    "word": p.fmt_word(w),
                    "coefficient": coeff,
                    "tau": [tau.re, tau.im],
                    "balanced": balanced,
                    "top_letters": top,
                    "tail_bound": bound,
                }));
            }
            println!(
                "{}",
                serde_json::json!({
                    "algebra": p.id,
                    "input": monomial,
                    "cutoff": cutoff,
                    "q": q,
                    "phi": phi,
                    "tau": [total.re, total.im],
                    "tail_bound": total_bound,
                    "terms": terms,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, cfg, out } => {
            if !suite_names().contains(&suite.as_str()) {
                return Err(Error::Unsupported(format!(
                    "unknown suite `{suite}`; expected one of {:?}",
                    suite_names()
                )));
            }
            let report = run_suite(&suite, &cfg.to_config())?;
            emit_report(&report, out.as_deref())
        }
        Cmd::FredholmVerify { n, cfg } => {
            let rc = cfg.to_config();
            let cutoff = rc.cutoff.unwrap_or(60);
            let fm = FredholmModule::new(n, cutoff, rc.q, rc.phi);
            let mut config = BTreeMap::new();
            config.insert("n".to_string(), n.to_string());
            config.insert("cutoff".to_string(), cutoff.to_string());
            config.insert("q".to_string(), format!("{}", rc.q));
            config.insert("phi".to_string(), format!("{}", rc.phi));
            config.insert("seed".to_string(), rc.seed.to_string());
            let report = Report::new(config, fm.verify(rc.seed, &format!("fredholm.n{n}")));
            emit_report(&report, None)
        }
    }
}

fn emit_report(report: &Report, out: Option<&std::path::Path>) -> Result<ExitCode> {
    let json = report.to_json();
    match out {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => println!("{json}"),
    }
    eprint!("{}", report.human_summary());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
