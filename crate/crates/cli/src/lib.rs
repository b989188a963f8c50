//! Command-line front end: argument parsing, dispatch, and text/JSON
//! rendering. Exit codes: 0 success, 1 property-suite failure, 2 bad input,
//! 3 configured bound exceeded.

pub mod payload;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::process::ExitCode;

use affgrass_core::affine::{AffineElem, AffineGroup, Bounds};
use affgrass_core::cache::{cached_minreps, convention_hash, Cache};
use affgrass_core::classify::{classify_all, type_report, TypeReport};
use affgrass_core::cohomology::{c1_class, chain_coeffs, pd_status_from, ChainCoeffs};
use affgrass_core::schubert::{
    schubert_poincare, segments, segments_by_coset, segments_by_orbit, star, star_readings,
    SchubertClass, SegmentFactorizer,
};
use affgrass_core::verify::{parse_suites, run_suites, SuiteParams, DEFAULT_SEED};
use affgrass_core::{parse_type, Error, LieType};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use payload::*;

#[derive(Debug, Parser)]
#[command(
    name = "affgrass",
    version,
    about = "Affine Weyl group and affine Schubert combinatorics"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Emit a versioned JSON envelope instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Neither read nor write the enumeration cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Seed for sampled property sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest length for level-by-level enumeration.
    #[arg(long, global = true, value_name = "LEN")]
    pub enum_bound: Option<usize>,
    /// Largest element length for per-element algorithms.
    #[arg(long, global = true, value_name = "LEN")]
    pub elem_bound: Option<usize>,
    /// Largest finite orbit or parabolic quotient to build.
    #[arg(long, global = true, value_name = "N")]
    pub max_orbit: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Classification summary for one type.
    Report { type_label: String },
    /// Minimal coset representatives of the affine Weyl group by length.
    Enumerate {
        type_label: String,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Cell counts of a Schubert variety.
    Poincare {
        type_label: String,
        #[arg(long)]
        element: String,
    },
    /// The star product of two Schubert classes.
    Star {
        type_label: String,
        left: String,
        right: String,
    },
    /// Segments, by all three characterizations.
    Segments { type_label: String },
    /// Unique segment factorization of a Schubert class.
    Factorize {
        type_label: String,
        #[arg(long)]
        element: String,
    },
    /// First Chern class and chain coefficients on the lambda_0 Levi orbit.
    Chevalley { type_label: String },
    /// Reports for every type up to a rank, plus E6, E7, E8, F4, G2.
    ClassifyAll {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
    },
    /// Run named property suites (`all` or a comma-separated list).
    Verify {
        type_label: String,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    SuiteFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_bound() => 3,
            CliError::Core(e) if e.is_parse() || matches!(e, Error::NotMinRep(_)) => 2,
            CliError::Core(_) => 1,
            CliError::SuiteFailed(_) => 1,
        }
    }
}

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// A nonzero exit after printing, for failed property suites.
    pub failed: bool,
}

struct Ctx {
    opts: GlobalOpts,
}

impl Ctx {
    fn group(&self, t: LieType) -> AffineGroup {
        let mut b = Bounds::for_rank(t.rank());
        if let Some(x) = self.opts.enum_bound {
            b.enum_len = x;
        }
        if let Some(x) = self.opts.elem_bound {
            b.elem_len = x;
        }
        if let Some(x) = self.opts.max_orbit {
            b.max_orbit = x;
        }
        AffineGroup::new(t).with_bounds(b)
    }

    fn cache(&self) -> Option<Cache> {
        (!self.opts.no_cache).then(Cache::from_env)
    }

    fn emit<P: Serialize>(
        &self,
        command: &str,
        type_label: &str,
        payload: &P,
        text: impl FnOnce() -> String,
    ) -> String {
        if self.opts.json {
            let env = ReportEnvelope {
                schema_version: SCHEMA_VERSION,
                command: command.to_string(),
                type_label: type_label.to_string(),
                payload: serde_json::to_value(payload).expect("payload serializes"),
                convention_hash: convention_hash(),
            };
            serde_json::to_string_pretty(&env).expect("envelope serializes") + "\n"
        } else {
            text()
        }
    }
}

fn element_row(g: &AffineGroup, x: &AffineElem) -> ElementRow {
    ElementRow {
        element: g.format_elem(x),
        length: x.len(),
        translation: x.trans().0.clone(),
        finite_word: g.weyl().reduced_word(x.fin()),
    }
}

fn schubert_arg(g: &AffineGroup, text: &str) -> Result<SchubertClass, Error> {
    SchubertClass::new(g, g.parse_elem(text)?)
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&width).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c:<w$}  ");
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    out += &line(
        width
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn set(s: &std::collections::BTreeSet<usize>) -> String {
    let v: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn report_text(r: &TypeReport) -> String {
    let a = match &r.chain_coeffs {
        ChainCoeffs::Chain(a) => format!("{a:?}"),
        ChainCoeffs::NotAChain => "not a chain".into(),
    };
    let rows = vec![
        vec!["type".into(), r.type_label.clone()],
        vec!["I(lambda0)".into(), set(&r.i_lambda0)],
        vec!["node 0 neighbors".into(), set(&r.node0_neighbors)],
        vec!["levi orbit".into(), r.levi_descriptor.clone()],
        vec![
            "levi orbit cells".into(),
            format!("{:?}", r.levi_orbit_poincare),
        ],
        vec!["chain".into(), r.chain.to_string()],
        vec!["chain coefficients".into(), a],
        vec!["thom duality".into(), format!("{:?}", r.pd_status)],
        vec!["bott nodes".into(), set(&r.bott_nodes)],
        vec!["minuscule nodes".into(), set(&r.minuscule_nodes)],
        vec![
            "smooth schubert genv".into(),
            r.smooth_schubert_genv.to_string(),
        ],
        vec!["exponents".into(), format!("{:?}", r.exponents)],
        vec![
            "max smooth schubert dim".into(),
            r.max_smooth_schubert_dim
                .map_or("-".into(), |d| d.to_string()),
        ],
    ];
    table(&["field", "value"], &rows)
}

fn run_command(ctx: &Ctx, cmd: &Command) -> Result<Output, CliError> {
    let ok = |text| {
        Ok(Output {
            text,
            failed: false,
        })
    };
    match cmd {
        Command::Report { type_label } => {
            let t = parse_type(type_label)?;
            let r = type_report(t)?;
            ok(ctx.emit("report", &t.label(), &r, || report_text(&r)))
        }
        Command::Enumerate {
            type_label,
            max_len,
        } => {
            let t = parse_type(type_label)?;
            let g = ctx.group(t);
            let levels = cached_minreps(&g, *max_len, ctx.cache().as_ref())?;
            let p = EnumeratePayload {
                max_len: *max_len,
                level_sizes: levels.level_sizes(),
                elements: levels.iter().map(|x| element_row(&g, x)).collect(),
            };
            ok(ctx.emit("enumerate", &t.label(), &p, || {
                let rows: Vec<Vec<String>> = p
                    .elements
                    .iter()
                    .map(|e| {
                        vec![
                            e.length.to_string(),
                            format!("{:?}", e.translation),
                            format!("{:?}", e.finite_word),
                            e.element.clone(),
                        ]
                    })
                    .collect();
                format!("level sizes {:?}\n", p.level_sizes)
                    + &table(&["len", "translation", "finite word", "element"], &rows)
            }))
        }
        Command::Poincare {
            type_label,
            element,
        } => {
            let t = parse_type(type_label)?;
            let g = ctx.group(t);
            let w = schubert_arg(&g, element)?;
            let poly = schubert_poincare(&g, &w)?;
            let p = PoincarePayload {
                element: g.format_elem(w.index()),
                length: w.dim(),
                coeffs: poly.coeffs().to_vec(),
                polynomial: poly.to_string(),
                palindromic: poly.is_palindromic(),
                chain: poly.is_chain(),
            };
            ok(ctx.emit("poincare", &t.label(), &p, || {
                table(
                    &["element", "length", "poincare", "palindromic", "chain"],
                    &[vec![
                        p.element.clone(),
                        p.length.to_string(),
                        p.polynomial.clone(),
                        p.palindromic.to_string(),
                        p.chain.to_string(),
                    ]],
                )
            }))
        }
        Command::Star {
            type_label,
            left,
            right,
        } => {
            let t = parse_type(type_label)?;
            let g = ctx.group(t);
            let a = schubert_arg(&g, left)?;
            let b = schubert_arg(&g, right)?;
            let readings = star_readings(&g, &a, &b)?;
            let res = star(&g, &a, &b)?;
            let p = StarPayload {
                left: g.format_elem(a.index()),
                right: g.format_elem(b.index()),
                result: res.class().map(|c| g.format_elem(c.index())),
                result_length: res.class().map(SchubertClass::dim),
                length_additive: readings.length_additive,
                product_in_minreps: readings.product_in_minreps,
            };
            ok(ctx.emit("star", &t.label(), &p, || {
                let r = p.result.clone().unwrap_or_else(|| "0".into());
                format!("{} * {} = {}\n", p.left, p.right, r)
            }))
        }
        Command::Segments { type_label } => {
            let t = parse_type(type_label)?;
            let g = ctx.group(t);
            let segs = segments(&g)?;
            let agree = segs == segments_by_orbit(&g)? && segs == segments_by_coset(&g)?;
            let p = SegmentsPayload {
                count: segs.len(),
                segments: segs.iter().map(|s| element_row(&g, s.index())).collect(),
                routes_agree: agree,
            };
            ok(ctx.emit("segments", &t.label(), &p, || {
                let rows: Vec<Vec<String>> = p
                    .segments
                    .iter()
                    .map(|e| {
                        vec![
                            e.length.to_string(),
                            format!("{:?}", e.translation),
                            e.element.clone(),
                        ]
                    })
                    .collect();
                format!(
                    "{} segments, characterizations agree: {}\n",
                    p.count, p.routes_agree
                ) + &table(&["len", "translation", "element"], &rows)
            }))
        }
        Command::Factorize {
            type_label,
            element,
        } => {
            let t = parse_type(type_label)?;
            let g = ctx.group(t);
            let w = schubert_arg(&g, element)?;
            let fac = SegmentFactorizer::new(&g)?;
            let factors = fac.factorize(&w)?;
            let refactor_ok = fac.refactor_check(&w)?;
            let p = FactorizePayload {
                element: g.format_elem(w.index()),
                length: w.dim(),
                factors: factors.iter().map(|f| g.format_elem(f.index())).collect(),
                refactor_ok,
            };
            ok(ctx.emit("factorize", &t.label(), &p, || {
                let factors = if p.factors.is_empty() {
                    "(empty product)".to_string()
                } else {
                    p.factors.join(" * ")
                };
                format!(
                    "{} = {}\nstar product of factors reproduces the class: {}\n",
                    p.element, factors, p.refactor_ok
                )
            }))
        }
        Command::Chevalley { type_label } => {
            let t = parse_type(type_label)?;
            let c1 = c1_class(t)?;
            let coeffs = chain_coeffs(t)?;
            let p = ChevalleyPayload {
                i_lambda0: c1.i_set.clone(),
                c1: c1.terms.iter().map(|(w, &c)| (w.clone(), c)).collect(),
                chain: matches!(coeffs, ChainCoeffs::Chain(_)),
                a: match &coeffs {
                    ChainCoeffs::Chain(a) => Some(a.clone()),
                    ChainCoeffs::NotAChain => None,
                },
                pd_status: pd_status_from(&coeffs),
            };
            ok(ctx.emit("chevalley", &t.label(), &p, || {
                let c1: Vec<String> =
                    p.c1.iter()
                        .map(|(w, c)| format!("{c}*sigma{w:?}"))
                        .collect();
                let rows = vec![
                    vec!["I(lambda0)".into(), set(&p.i_lambda0)],
                    vec!["c1".into(), c1.join(" + ")],
                    vec!["chain".into(), p.chain.to_string()],
                    vec![
                        "a".into(),
                        p.a.as_ref().map_or("-".into(), |a| format!("{a:?}")),
                    ],
                    vec!["thom duality".into(), format!("{:?}", p.pd_status)],
                ];
                table(&["field", "value"], &rows)
            }))
        }
        Command::ClassifyAll { max_rank } => {
            let reports = classify_all(*max_rank)?;
            let p = ClassifyPayload {
                max_rank: *max_rank,
                reports,
            };
            ok(ctx.emit("classify-all", "all", &p, || {
                let rows: Vec<Vec<String>> = p
                    .reports
                    .iter()
                    .map(|r| {
                        vec![
                            r.type_label.clone(),
                            set(&r.i_lambda0),
                            r.chain.to_string(),
                            format!("{:?}", r.pd_status),
                            set(&r.bott_nodes),
                            set(&r.minuscule_nodes),
                            r.smooth_schubert_genv.to_string(),
                            r.e_top.to_string(),
                            r.max_smooth_schubert_dim
                                .map_or("-".into(), |d| d.to_string()),
                        ]
                    })
                    .collect();
                table(
                    &[
                        "type",
                        "I(lambda0)",
                        "chain",
                        "thom duality",
                        "bott",
                        "minuscule",
                        "smooth genv",
                        "e_top",
                        "max smooth dim",
                    ],
                    &rows,
                )
            }))
        }
        Command::Verify { type_label, suite } => {
            let t = parse_type(type_label)?;
            let suites = parse_suites(suite)?;
            let g = ctx.group(t);
            let params = SuiteParams::for_group(&g, ctx.opts.seed);
            let checks = run_suites(&g, &suites, &params)?;
            let passed = checks.iter().all(|c| c.passed);
            let p = VerifyPayload {
                suites: suites.iter().map(|s| s.name().to_string()).collect(),
                seed: ctx.opts.seed,
                passed,
                checks,
            };
            let text = ctx.emit("verify", &t.label(), &p, || {
                let rows: Vec<Vec<String>> = p
                    .checks
                    .iter()
                    .map(|c| {
                        vec![
                            if c.passed { "PASS" } else { "FAIL" }.into(),
                            c.suite.clone(),
                            c.name.clone(),
                            c.detail.clone(),
                        ]
                    })
                    .collect();
                table(&["status", "suite", "property", "detail"], &rows)
            });
            Ok(Output {
                text,
                failed: !passed,
            })
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let ctx = Ctx {
        opts: cli.global.clone(),
    };
    let out = run_command(&ctx, &cli.command)?;
    if out.failed {
        return Err(CliError::SuiteFailed(out.text));
    }
    Ok(out)
}

/// Full entry point: parse, run, print, and map the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::SUCCESS
        }
        Err(CliError::SuiteFailed(text)) => {
            print!("{text}");
            eprintln!("error: one or more properties failed");
            ExitCode::from(1)
        }
        Err(e) => {
            if let CliError::Core(inner) = &e {
                eprintln!("error: {inner}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Output, CliError> {
        let mut full = vec!["affgrass", "--no-cache"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn star_text() {
        let out = run_args(&["star", "A1", "word:0", "word:1,0"]).unwrap();
        assert_eq!(out.text, "word:0 * word:1,0 = word:0,1,0\n");
        let out = run_args(&["star", "A1", "word:0", "word:0"]).unwrap();
        assert!(out.text.ends_with("= 0\n"));
    }

    #[test]
    fn exit_codes() {
        let e = run_args(&["star", "A1", "word:0,x", "word:0"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_args(&["report", "Q9"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_args(&["enumerate", "A2", "--max-len", "99"]).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        let e = run_args(&["poincare", "A1", "--element", "word:1"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn table_alignment() {
        let t = table(&["a", "bb"], &[vec!["xxx".into(), "y".into()]]);
        assert_eq!(t, "a    bb\n---  --\nxxx  y\n");
    }
}
