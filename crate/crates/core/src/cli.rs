//! The `hzeta` command line.
//!
//! Every command builds one [`Report`] holding a JSON document, a CSV table
//! and a text rendering; `--output` picks which one is printed. JSON
//! integers are written as decimal strings.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource guard.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith;
use crate::error::{Error, Result};
use crate::isoclass::{self, Case, IsoclassLabel};
use crate::monomial::MonomialMatrix;
use crate::oracle::{self, OracleLimits};
use crate::quad_ring::QuadRing;
use crate::repbuild;
use crate::selftest;
use crate::zeta;

pub const SCHEMA: u32 = 1;
/// Largest `pmax` accepted by `classify`.
pub const CLASSIFY_LIMIT: u64 = 10_000_000;
/// Largest `p^n` for which `count` cross-checks the closed form by enumeration.
pub const ENUMERATION_LIMIT: u64 = 100_000_000;
/// Largest `nmax` accepted by `series` and `zeta --check-identity`.
pub const SERIES_LIMIT: u64 = 100_000;
/// Most representations `build` verifies in one call without `--index`.
pub const BUILD_LIMIT: u64 = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "hzeta", version, about = "Twist isoclasses of the Heisenberg group over quadratic integers")]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting type of every prime up to PMAX.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        pmax: u64,
    },
    /// Number of twist isoclasses of dimension p^n.
    Count {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// r_1, ..., r_NMAX.
    Series {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        nmax: u64,
    },
    /// Explicit representatives of dimension p^n, with verification.
    Build {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Position of a single label in the census.
        #[arg(long)]
        index: Option<u64>,
    },
    /// Local factors, the global identity and the functional equation.
    Zeta {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        p: Option<u64>,
        /// Compare the coefficients of ζ_K(s−1)/ζ_K(s) with r_n for n <= NMAX.
        #[arg(long, requires = "nmax", conflicts_with_all = ["p", "feq"])]
        check_identity: bool,
        #[arg(long)]
        nmax: Option<u64>,
        /// Exponent of the functional equation of the local factor at p.
        #[arg(long, requires = "p")]
        feq: bool,
    },
    /// Character-table count on the finite quotient at level k.
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        /// Compare only dimension p^n; without it, report the whole census.
        #[arg(long)]
        n: Option<u32>,
        /// Raise the group-order and class-count guards.
        #[arg(long)]
        stretch: bool,
    },
    /// Run the acceptance grid and print a pass/fail matrix.
    Selftest {
        /// Seed for the random congruence sample.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Leave out the two largest oracle comparisons.
        #[arg(long)]
        skip_stretch: bool,
    },
}

/// The three renderings of one command's result.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
    /// False when a mathematical check failed (exit code 1).
    pub verified: bool,
}

impl Report {
    pub fn render(&self, output: Output) -> String {
        match output {
            Output::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Output::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 fields")
            }
            Output::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn int(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn document(command: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("report bodies are objects");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    body
}

fn ring(d: i64) -> Result<QuadRing> {
    QuadRing::new(d)
}

fn prime(p: u64) -> Result<u64> {
    if arith::is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

fn guard(size: u128, limit: u64) -> Result<()> {
    if size > limit as u128 {
        return Err(Error::TooLarge {
            size,
            limit: limit as u128,
        });
    }
    Ok(())
}

fn prime_power(p: u64, n: u32) -> Result<u64> {
    p.checked_pow(n).ok_or(Error::TooLarge {
        size: (p as u128).saturating_pow(n),
        limit: u64::MAX as u128,
    })
}

pub fn cmd_classify(d: i64, pmax: u64) -> Result<Report> {
    let ring = ring(d)?;
    guard(pmax as u128, CLASSIFY_LIMIT)?;
    let mut rows = Vec::new();
    for p in arith::primes_up_to(pmax) {
        rows.push(vec![p.to_string(), ring.classify_prime(p)?.to_string()]);
    }
    let primes: Vec<Value> = rows.iter().map(|r| json!({"p": r[0], "class": r[1]})).collect();
    let text = rows.iter().map(|r| format!("{} {}", r[0], r[1])).collect::<Vec<_>>().join("\n");
    Ok(Report {
        json: document("classify", json!({"d": int(d), "pmax": int(pmax), "primes": primes})),
        header: vec!["p", "class"],
        rows,
        text,
        verified: true,
    })
}

pub fn cmd_count(d: i64, p: u64, n: u32) -> Result<Report> {
    let ring = ring(d)?;
    let p = prime(p)?;
    let q = prime_power(p, n)?;
    let closed_form = isoclass::closed_form_count(&ring, p, n)?;
    let enumerated = if q <= ENUMERATION_LIMIT {
        Some(isoclass::enumerate(&ring, p, n)?.count())
    } else {
        None
    };
    let verified = enumerated.is_none_or(|e| e == closed_form);
    let text = match enumerated {
        Some(e) if e != closed_form => format!("{closed_form} (enumeration gives {e})"),
        _ => closed_form.to_string(),
    };
    Ok(Report {
        json: document(
            "count",
            json!({
                "d": int(d), "p": int(p), "n": int(n), "dim": int(q),
                "count": int(closed_form),
                "enumerated": enumerated.map_or(Value::Null, int),
                "agree": verified,
            }),
        ),
        header: vec!["d", "p", "n", "count", "enumerated"],
        rows: vec![vec![
            d.to_string(),
            p.to_string(),
            n.to_string(),
            closed_form.to_string(),
            enumerated.map_or(String::new(), |e| e.to_string()),
        ]],
        text,
        verified,
    })
}

pub fn cmd_series(d: i64, nmax: u64) -> Result<Report> {
    let ring = ring(d)?;
    guard(nmax as u128, SERIES_LIMIT)?;
    let coeffs = (1..=nmax).map(|n| isoclass::r_coeff(&ring, n)).collect::<Result<Vec<u64>>>()?;
    let rows = coeffs
        .iter()
        .zip(1..)
        .map(|(r, n)| vec![n.to_string(), r.to_string()])
        .collect();
    let text = coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    Ok(Report {
        json: document(
            "series",
            json!({"d": int(d), "nmax": int(nmax), "r": coeffs.iter().map(int).collect::<Vec<_>>()}),
        ),
        header: vec!["n", "r_n"],
        rows,
        text,
        verified: true,
    })
}

fn matrix_json(m: &MonomialMatrix) -> Value {
    json!({
        "perm": m.perm.iter().map(int).collect::<Vec<_>>(),
        "exps": m.exps.iter().map(int).collect::<Vec<_>>(),
    })
}

fn case_name(case: Case) -> &'static str {
    match case {
        Case::Case1 => "Case1",
        Case::Case2 => "Case2",
    }
}

struct Built {
    index: u64,
    label: IsoclassLabel,
    rep: repbuild::Representation,
    relations: bool,
    image_order: usize,
    irreducible: bool,
}

fn build_one(ring: &QuadRing, index: u64, label: IsoclassLabel) -> Result<Built> {
    let rep = repbuild::build(ring, &label)?;
    let relations = repbuild::verify_relations(ring, &rep);
    let (image_order, norm) = repbuild::character_norm(&rep)?;
    let irreducible = norm[0] == image_order as i128 && norm[1..].iter().all(|&c| c == 0);
    Ok(Built {
        index,
        label,
        rep,
        relations,
        image_order,
        irreducible,
    })
}

fn ok(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAILED"
    }
}

pub fn cmd_build(d: i64, p: u64, n: u32, index: Option<u64>) -> Result<Report> {
    let ring = ring(d)?;
    let p = prime(p)?;
    let dim = prime_power(p, n)?;
    guard(dim as u128, ENUMERATION_LIMIT)?;
    let census = isoclass::enumerate(&ring, p, n)?;
    let built: Vec<Built> = match index {
        Some(i) => {
            let label = census.label(i).ok_or_else(|| {
                Error::InvalidArgument(format!("label index {i} is out of range (census has {})", census.count()))
            })?;
            vec![build_one(&ring, i, label)?]
        }
        None => {
            guard(census.count() as u128, BUILD_LIMIT)?;
            census
                .labels()
                .zip(0..)
                .map(|(label, i)| build_one(&ring, i, label))
                .collect::<Result<_>>()?
        }
    };
    let verified = built.iter().all(|b| b.relations && b.irreducible);
    let reps: Vec<Value> = built
        .iter()
        .map(|b| {
            let l = &b.label;
            json!({
                "index": int(b.index),
                "label": {
                    "r": int(l.r), "m": int(l.m), "case": case_name(l.case),
                    "u": int(l.u), "l": int(l.l),
                    "lambda_exp": int(l.lambda_exp), "mu_exp": int(l.mu_exp),
                },
                "dim": int(b.rep.dim()),
                "root_order": int(b.rep.root_order()),
                "generators": {
                    "x": matrix_json(&b.rep.a),
                    "x_d": matrix_json(&b.rep.a_d),
                    "y": matrix_json(&b.rep.b),
                    "y_d": matrix_json(&b.rep.b_d),
                    "z": matrix_json(&b.rep.lambda),
                    "z_d": matrix_json(&b.rep.mu),
                },
                "relations_ok": b.relations,
                "irreducible_ok": b.irreducible,
                "image_order": int(b.image_order),
            })
        })
        .collect();
    let rows = built
        .iter()
        .map(|b| {
            let l = &b.label;
            vec![
                b.index.to_string(),
                b.rep.dim().to_string(),
                b.rep.root_order().to_string(),
                l.r.to_string(),
                l.m.to_string(),
                case_name(l.case).to_string(),
                l.u.to_string(),
                l.l.to_string(),
                l.lambda_exp.to_string(),
                l.mu_exp.to_string(),
                b.relations.to_string(),
                b.irreducible.to_string(),
                b.image_order.to_string(),
            ]
        })
        .collect();
    let text = if built.is_empty() {
        format!("no twist isoclasses of dimension {dim}")
    } else {
        built
            .iter()
            .map(|b| {
                let l = &b.label;
                format!(
                    "#{} dim {} {} r={} m={} Λ=ζ^{} Λ_d=ζ^{} (ζ of order {}): relations {}, irreducible {} (image order {})",
                    b.index,
                    b.rep.dim(),
                    case_name(l.case),
                    l.r,
                    l.m,
                    l.lambda_exp,
                    l.mu_exp,
                    b.rep.root_order(),
                    ok(b.relations),
                    ok(b.irreducible),
                    b.image_order
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    Ok(Report {
        json: document(
            "build",
            json!({
                "d": int(d), "p": int(p), "n": int(n),
                "census_size": int(census.count()),
                "representations": reps,
                "all_ok": verified,
            }),
        ),
        header: vec![
            "index", "dim", "root_order", "r", "m", "case", "u", "l", "lambda_exp", "mu_exp", "relations_ok",
            "irreducible_ok", "image_order",
        ],
        rows,
        text,
        verified,
    })
}

pub fn cmd_zeta(d: i64, p: Option<u64>, check_identity: bool, nmax: Option<u64>, feq: bool) -> Result<Report> {
    let ring = ring(d)?;
    if check_identity {
        let nmax = nmax.ok_or_else(|| Error::InvalidArgument("--check-identity needs --nmax".into()))?;
        guard(nmax as u128, SERIES_LIMIT)?;
        let table = zeta::identity_table(&ring, nmax as usize)?;
        let first_bad = table.iter().find(|row| row.b_n != row.r_n.into());
        let verified = first_bad.is_none();
        let text = match first_bad {
            None => "OK".to_string(),
            Some(row) => format!("FAILED at n = {}: r_n = {}, coefficient {}", row.n, row.r_n, row.b_n),
        };
        let rows = table
            .iter()
            .map(|row| vec![row.n.to_string(), row.r_n.to_string(), row.b_n.to_string()])
            .collect();
        let coeffs: Vec<Value> = table
            .iter()
            .map(|row| json!({"n": int(row.n), "r_n": int(row.r_n), "b_n": int(&row.b_n)}))
            .collect();
        return Ok(Report {
            json: document(
                "zeta",
                json!({"d": int(d), "nmax": int(nmax), "identity_holds": verified, "coefficients": coeffs}),
            ),
            header: vec!["n", "r_n", "b_n"],
            rows,
            text,
            verified,
        });
    }
    let p = prime(p.ok_or_else(|| Error::InvalidArgument("zeta needs --p or --check-identity".into()))?)?;
    let class = ring.classify_prime(p)?;
    let factor = zeta::local_factor(class);
    if feq {
        let exponent = zeta::functional_equation_exponent(class)?;
        return Ok(Report {
            json: document(
                "zeta",
                json!({"d": int(d), "p": int(p), "class": class.to_string(), "feq_exponent": int(exponent)}),
            ),
            header: vec!["p", "class", "feq_exponent"],
            rows: vec![vec![p.to_string(), class.to_string(), exponent.to_string()]],
            text: format!("exponent {exponent}"),
            verified: true,
        });
    }
    let verified = zeta::check_local_identity(class);
    Ok(Report {
        json: document(
            "zeta",
            json!({
                "d": int(d), "p": int(p), "class": class.to_string(),
                "local_factor": factor.to_string(),
                "matches_dedekind_quotient": verified,
            }),
        ),
        header: vec!["p", "class", "local_factor"],
        rows: vec![vec![p.to_string(), class.to_string(), factor.to_string()]],
        text: factor.to_string(),
        verified,
    })
}

fn comparison_json(c: &oracle::Comparison) -> Value {
    json!({"n": int(c.n), "oracle": int(c.oracle_count), "formula": int(c.closed_form), "agree": c.agree})
}

pub fn cmd_oracle(d: i64, p: u64, k: u32, n: Option<u32>, stretch: bool) -> Result<Report> {
    let ring = ring(d)?;
    let p = prime(p)?;
    let limits = if stretch {
        OracleLimits::stretch()
    } else {
        OracleLimits::default()
    };
    if let Some(n) = n {
        let c = oracle::compare(&ring, p, k, n, &limits)?;
        let mut json = comparison_json(&c);
        json["d"] = int(d);
        json["p"] = int(p);
        json["k"] = int(k);
        return Ok(Report {
            json: document("oracle", json),
            header: vec!["d", "p", "k", "n", "oracle", "formula", "agree"],
            rows: vec![vec![
                d.to_string(),
                p.to_string(),
                k.to_string(),
                n.to_string(),
                c.oracle_count.to_string(),
                c.closed_form.to_string(),
                c.agree.to_string(),
            ]],
            text: format!("oracle {}, formula {}, agree {}", c.oracle_count, c.closed_form, c.agree),
            verified: c.agree,
        });
    }
    let report = oracle::census(&ring, p, k, &limits)?;
    let verified = report.all_agree();
    let degree_census: serde_json::Map<String, Value> =
        report.degree_census.iter().map(|(dim, c)| (dim.to_string(), int(c))).collect();
    let orbits: serde_json::Map<String, Value> =
        report.twist_orbits_by_dim.iter().map(|(dim, c)| (dim.to_string(), int(c))).collect();
    let mut text = vec![format!(
        "|G| = {}, {} classes, F_{}",
        report.group_order, report.class_count, report.field_char
    )];
    for (dim, c) in &report.degree_census {
        text.push(format!("degree {dim}: {c} characters, {} twist orbits", report.twist_orbits_by_dim[dim]));
    }
    for c in &report.agree_flags {
        text.push(format!("n = {}: oracle {}, formula {}, agree {}", c.n, c.oracle_count, c.closed_form, c.agree));
    }
    let rows = report
        .degree_census
        .iter()
        .map(|(dim, c)| vec![dim.to_string(), c.to_string(), report.twist_orbits_by_dim[dim].to_string()])
        .collect();
    Ok(Report {
        json: document(
            "oracle",
            json!({
                "d": int(d), "p": int(p), "k": int(k),
                "group_order": int(report.group_order),
                "class_count": int(report.class_count),
                "field_char": int(report.field_char),
                "degree_census": degree_census,
                "twist_orbits_by_dim": orbits,
                "agree_flags": report.agree_flags.iter().map(comparison_json).collect::<Vec<_>>(),
            }),
        ),
        header: vec!["degree", "characters", "twist_orbits"],
        rows,
        text: text.join("\n"),
        verified,
    })
}

pub fn cmd_selftest(seed: u64, stretch: bool) -> Report {
    let outcomes = selftest::run_all(seed, stretch);
    let verified = outcomes.iter().all(selftest::Outcome::passed);
    let rows = outcomes
        .iter()
        .map(|o| {
            vec![
                o.id.to_string(),
                o.name.to_string(),
                o.checks.to_string(),
                format!("{:.3}", o.elapsed.as_secs_f64()),
                o.limit.as_secs().to_string(),
                o.passed().to_string(),
                o.failure.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let criteria: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "id": int(o.id), "name": o.name, "checks": int(o.checks),
                "elapsed_ms": int(o.elapsed.as_millis()), "limit_ms": int(o.limit.as_millis()),
                "passed": o.passed(), "failure": o.failure,
            })
        })
        .collect();
    Report {
        json: document("selftest", json!({"seed": int(seed), "criteria": criteria, "all_passed": verified})),
        header: vec!["id", "name", "checks", "elapsed_s", "limit_s", "passed", "failure"],
        rows,
        text: outcomes.iter().map(selftest::Outcome::summary).collect::<Vec<_>>().join("\n"),
        verified,
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    match *command {
        Command::Classify { d, pmax } => cmd_classify(d, pmax),
        Command::Count { d, p, n } => cmd_count(d, p, n),
        Command::Series { d, nmax } => cmd_series(d, nmax),
        Command::Build { d, p, n, index } => cmd_build(d, p, n, index),
        Command::Zeta {
            d,
            p,
            check_identity,
            nmax,
            feq,
        } => cmd_zeta(d, p, check_identity, nmax, feq),
        Command::Oracle { d, p, k, n, stretch } => cmd_oracle(d, p, k, n, stretch),
        Command::Selftest { seed, skip_stretch } => Ok(cmd_selftest(seed, !skip_stretch)),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.exit_code() == 0 {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match execute(&config.command) {
        Ok(report) => {
            if write!(out, "{}", report.render(config.output)).is_err() {
                return 2;
            }
            if report.verified {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.kind());
            e.exit_code()
        }
    }
}
