//! `lie-cartan`: exact invariants of Lie algebras from the command line.
//!
//! Algebras come from `.lie` files (bracket or Maurer-Cartan syntax) or
//! from the built-in catalog (`--catalog kaplan7`). Exit codes: 0 success,
//! 1 failed verification verdict, 2 input error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lie_cartan::catalog::{self, Params};
use lie_cartan::deform::{self, Cochain2, Contraction, DeformationCheck, ScalingMap};
use lie_cartan::dsl;
use lie_cartan::forms::KForm;
use lie_cartan::lie::{JacobiReport, LieAlgebra};
use lie_cartan::rational::Rational;
use lie_cartan::report::{Report, Value};
use lie_cartan::{cartan, charseq};

#[derive(Parser)]
#[command(
    name = "lie-cartan",
    about = "Cartan class, coadjoint orbit dimensions and exact invariants of Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct InputArgs {
    /// Path to a `.lie` file.
    file: Option<PathBuf>,
    /// Catalog entry id instead of a file (see `lie-cartan catalog`).
    #[arg(long)]
    catalog: Option<String>,
    /// Catalog builder parameter, `key=value`; repeatable.
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Args)]
struct SamplingArgs {
    /// Seed for the deterministic sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random forms/vectors to sample.
    #[arg(long, default_value_t = 200)]
    budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Jacobi identity and d^2 = 0 on the dual basis.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Cartan class of a 1-form, with both computation routes.
    Class {
        #[command(flatten)]
        input: InputArgs,
        /// 1-form expression over the dual names, e.g. "w5" or "3/2*X1 - X4".
        #[arg(long)]
        form: String,
    },
    /// Coadjoint orbit dimension of a 1-form.
    OrbitDim {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        form: String,
    },
    /// Index of the algebra and the maximal Cartan class, certified.
    Index {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Characteristic sequence of a nilpotent algebra.
    Charseq {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Contact predicate: odd dimension with a form of maximal class.
    Contact {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Frobenius predicate: even dimension with a form of maximal class.
    Frobenius {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Classes observed over the sampling stream.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Central extension by a closed nondegenerate 2-form.
    Extend {
        #[command(flatten)]
        input: InputArgs,
        /// 2-form expression over the dual names, e.g. "X1^X2 + X3^X4".
        #[arg(long)]
        cocycle: String,
    },
    /// Check the quadratic deformation identities for cochain files.
    DeformCheck {
        #[command(flatten)]
        input: InputArgs,
        /// `.lie` file (bracket syntax) holding phi1 as a bilinear table.
        #[arg(long)]
        phi1: PathBuf,
        /// Optional `.lie` file holding phi2.
        #[arg(long)]
        phi2: Option<PathBuf>,
    },
    /// Contraction limit along a scaling family, or a brute-force search
    /// for a diagonal power scaling reaching a target algebra.
    Contract {
        #[command(flatten)]
        input: InputArgs,
        /// Scaling file: `scaling dim N` then N Laurent monomial lines.
        #[arg(long, conflicts_with = "target")]
        scaling: Option<PathBuf>,
        /// Target algebra (a `.lie` file path or a catalog id, optionally
        /// `id:key=val:key=val`): search for
        /// diagonal exponents whose limit has the target's brackets.
        #[arg(long)]
        target: Option<String>,
        /// Exponent box bound for the search.
        #[arg(long, default_value_t = 3)]
        search_bound: i64,
    },
    /// List catalog entries, or export one as a `.lie` document.
    Catalog {
        /// Entry id to export.
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long = "param")]
        params: Vec<String>,
        /// Export syntax: bracket | mc.
        #[arg(long, default_value = "bracket")]
        syntax: String,
    },
    /// Re-derive every expected invariant of a catalog entry.
    Verify {
        /// Entry id.
        #[arg(long)]
        catalog: String,
        #[arg(long = "param")]
        params: Vec<String>,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
}

enum AppError {
    /// Bad input (file, parse, parameters): exit code 2.
    Input(String),
    /// A verification produced a negative verdict: exit code 1.
    Negative,
}

impl From<dsl::ParseError> for AppError {
    fn from(e: dsl::ParseError) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<catalog::BuildError> for AppError {
    fn from(e: catalog::BuildError) -> Self {
        AppError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if let Some(r) = report {
                if json {
                    print!("{}", r.render_json());
                } else {
                    print!("{}", r.render_text());
                }
            }
            ExitCode::SUCCESS
        }
        Err(AppError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Negative) => ExitCode::from(1),
    }
}

fn load_file(path: &Path) -> Result<(String, dsl::AlgebraDocument), AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("{}: {e}", path.display())))?;
    let doc = dsl::parse_document(&text)
        .map_err(|e| AppError::Input(format!("{}:{e}", path.display())))?;
    Ok((text, doc))
}

/// Resolve the subject algebra: a `.lie` file or a catalog id.
fn resolve_input(input: &InputArgs) -> Result<(String, LieAlgebra), AppError> {
    match (&input.file, &input.catalog) {
        (Some(path), None) => {
            let (_, doc) = load_file(path)?;
            let l = doc
                .to_algebra()
                .map_err(|e| AppError::Input(format!("{}: {e}", path.display())))?;
            Ok((doc.name, l))
        }
        (None, Some(id)) => {
            let params = Params::parse(&input.params)?;
            let entry = catalog::build(id, &params)?;
            Ok((entry.id, entry.algebra))
        }
        (Some(_), Some(_)) => Err(AppError::Input(
            "give either a file or --catalog, not both".into(),
        )),
        (None, None) => Err(AppError::Input(
            "no input: give a .lie file or --catalog ID".into(),
        )),
    }
}

/// A `.lie` file path, or a catalog id (optionally `id:key=val,key=val`)
/// when no such file exists.
fn resolve_target(spec: &str) -> Result<(String, LieAlgebra), AppError> {
    let path = Path::new(spec);
    if path.exists() {
        let (_, doc) = load_file(path)?;
        let l = doc
            .to_algebra()
            .map_err(|e| AppError::Input(format!("{}: {e}", path.display())))?;
        Ok((doc.name, l))
    } else {
        // `id:key=val:key=val`; list values keep their commas.
        let mut parts = spec.split(':');
        let id = parts.next().unwrap_or(spec);
        let pairs: Vec<String> = parts.map(|s| s.to_string()).collect();
        let entry = catalog::build(id, &Params::parse(&pairs)?)?;
        Ok((entry.id, entry.algebra))
    }
}

/// Unchecked load for cochain tables (no Jacobi requirement).
fn load_cochain(path: &Path, dim: usize) -> Result<Cochain2, AppError> {
    let (_, doc) = load_file(path)?;
    if doc.dim != dim {
        return Err(AppError::Input(format!(
            "{}: cochain dimension {} does not match the base algebra dimension {dim}",
            path.display(),
            doc.dim
        )));
    }
    let l = doc
        .to_algebra_unchecked()
        .map_err(|e| AppError::Input(format!("{}: {e}", path.display())))?;
    Ok(Cochain2::from_algebra(&l))
}

fn form_from_expr(l: &LieAlgebra, expr: &str) -> Result<KForm, AppError> {
    let f = dsl::one_form_from_expr(l, expr).map_err(|e| AppError::Input(e.to_string()))?;
    if f.is_zero() {
        return Err(AppError::Input("the zero form has no Cartan class".into()));
    }
    Ok(f)
}

fn algebra_lines(l: &LieAlgebra) -> Value {
    let doc = dsl::document_from_algebra(l, "result", dsl::Syntax::Bracket);
    Value::List(
        dsl::render_document(&doc)
            .lines()
            .map(|s| Value::Str(s.to_string()))
            .collect(),
    )
}

fn vector_string(l: &LieAlgebra, v: &[Rational]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c.is_one() {
                l.basis_names()[i].clone()
            } else {
                format!("{c}*{}", l.basis_names()[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn run(cli: Cli) -> Result<Option<Report>, AppError> {
    match cli.command {
        Command::Check { input } => {
            // Load without the Jacobi gate: reporting violations is the
            // point of this command.
            let (name, l) = match (&input.file, &input.catalog) {
                (Some(path), None) => {
                    let (_, doc) = load_file(path)?;
                    let l = doc
                        .to_algebra_unchecked()
                        .map_err(|e| AppError::Input(format!("{}: {e}", path.display())))?;
                    (doc.name, l)
                }
                _ => resolve_input(&input)?,
            };
            let mut r = Report::new("check");
            r.set("algebra", name);
            r.set("dim", l.dim());
            match l.jacobi_check() {
                JacobiReport::Pass => {
                    r.set("jacobi", "pass");
                }
                JacobiReport::Violations(v) => {
                    r.set("jacobi", "fail");
                    r.set(
                        "violations",
                        Value::List(
                            v.iter()
                                .map(|d| {
                                    Value::Str(format!(
                                        "({},{},{}): cyclic sum {}",
                                        l.basis_names()[d.i],
                                        l.basis_names()[d.j],
                                        l.basis_names()[d.k],
                                        vector_string(&l, &d.defect)
                                    ))
                                })
                                .collect(),
                        ),
                    );
                }
            }
            let d_squared_zero = (0..l.dim()).all(|i| {
                let d = lie_cartan::forms::ce_differential(&l, &KForm::dual(l.dim(), i));
                lie_cartan::forms::ce_differential(&l, &d).is_zero()
            });
            r.set("d_squared_zero_on_duals", d_squared_zero);
            Ok(Some(r))
        }
        Command::Class { input, form } => {
            let (name, l) = resolve_input(&input)?;
            let alpha = form_from_expr(&l, &form)?;
            let report =
                cartan::cartan_class(&l, &alpha).map_err(|e| AppError::Input(e.to_string()))?;
            let oracle = cartan::cartan_class_wedge_oracle(&l, &alpha)
                .map_err(|e| AppError::Input(e.to_string()))?;
            let mut r = Report::new("class");
            r.set("algebra", name);
            r.set("form", form);
            r.set("class", report.class);
            r.set(
                "parity",
                match report.parity {
                    cartan::Parity::Odd => "odd",
                    cartan::Parity::Even => "even",
                },
            );
            r.set("orbit_dim", report.orbit_dim);
            r.set("stabilizer_dim", report.stabilizer.dim());
            r.set(
                "characteristic_space_dim",
                report.characteristic_space.dim(),
            );
            r.set("wedge_oracle_class", oracle);
            r.set("routes_agree", oracle == report.class);
            Ok(Some(r))
        }
        Command::OrbitDim { input, form } => {
            let (name, l) = resolve_input(&input)?;
            let alpha = form_from_expr(&l, &form)?;
            let report =
                cartan::cartan_class(&l, &alpha).map_err(|e| AppError::Input(e.to_string()))?;
            let mut r = Report::new("orbit-dim");
            r.set("algebra", name);
            r.set("form", form);
            r.set("class", report.class);
            r.set("orbit_dim", report.orbit_dim);
            Ok(Some(r))
        }
        Command::Index { input } => {
            let (name, l) = resolve_input(&input)?;
            let idx = cartan::index(&l);
            let (witness, wreport) = cartan::max_class_witness(&l);
            let mut r = Report::new("index");
            r.set("algebra", name);
            r.set("dim", l.dim());
            r.set("index", idx.index);
            r.set("max_class", idx.max_class);
            r.set("witness", witness.format_with_names(l.basis_names()));
            r.set("witness_class", wreport.class);
            Ok(Some(r))
        }
        Command::Charseq { input, sampling } => {
            let (name, l) = resolve_input(&input)?;
            let report = charseq::characteristic_sequence_seeded(&l, sampling.seed, 32)
                .map_err(|e| AppError::Input(e.to_string()))?;
            let mut r = Report::new("charseq");
            r.set("algebra", name);
            r.set("sequence", report.sequence.to_string());
            r.set("witness", vector_string(&l, &report.witness));
            r.set(
                "stability",
                if report.stable {
                    "stable under budget doubling"
                } else {
                    "NOT stabilized"
                },
            );
            r.set("seed", Value::Int(sampling.seed as i64));
            Ok(Some(r))
        }
        Command::Contact { input } => {
            let (name, l) = resolve_input(&input)?;
            let idx = cartan::index(&l);
            let mut r = Report::new("contact");
            r.set("algebra", name);
            r.set("dim", l.dim());
            r.set("max_class", idx.max_class);
            r.set("is_contact", l.dim() % 2 == 1 && idx.max_class == l.dim());
            Ok(Some(r))
        }
        Command::Frobenius { input } => {
            let (name, l) = resolve_input(&input)?;
            let idx = cartan::index(&l);
            let mut r = Report::new("frobenius");
            r.set("algebra", name);
            r.set("dim", l.dim());
            r.set("max_class", idx.max_class);
            r.set("is_frobenius", l.dim() % 2 == 0 && idx.max_class == l.dim());
            Ok(Some(r))
        }
        Command::Spectrum { input, sampling } => {
            let (name, l) = resolve_input(&input)?;
            let classes = cartan::class_spectrum_sample(&l, sampling.budget, sampling.seed);
            let mut r = Report::new("spectrum");
            r.set("algebra", name);
            r.set("budget", sampling.budget);
            r.set("seed", Value::Int(sampling.seed as i64));
            r.set(
                "classes",
                Value::List(classes.into_iter().map(Value::from).collect()),
            );
            r.set("note", "sampled lower approximation of the class spectrum");
            Ok(Some(r))
        }
        Command::Extend { input, cocycle } => {
            let (name, l) = resolve_input(&input)?;
            let theta = dsl::two_form_from_expr(&l, &cocycle)
                .map_err(|e| AppError::Input(e.to_string()))?;
            let ext = deform::central_extension(&l, &theta)
                .map_err(|e| AppError::Input(e.to_string()))?;
            let contact_form = deform::extension_contact_form(&ext);
            let class = cartan::cartan_class(&ext, &contact_form)
                .map_err(|e| AppError::Input(e.to_string()))?;
            let mut r = Report::new("extend");
            r.set("base", name);
            r.set("cocycle", cocycle);
            r.set("extension", algebra_lines(&ext));
            r.set("extension_dim", ext.dim());
            r.set("class_of_new_dual", class.class);
            r.set("contact", class.class == ext.dim());
            Ok(Some(r))
        }
        Command::DeformCheck { input, phi1, phi2 } => {
            let (name, l) = resolve_input(&input)?;
            let mu0 = Cochain2::from_algebra(&l);
            let c1 = load_cochain(&phi1, l.dim())?;
            let c2 = match phi2 {
                Some(p) => load_cochain(&p, l.dim())?,
                None => Cochain2::zero(l.dim()),
            };
            let check = deform::verify_quadratic_deformation(&mu0, &c1, &c2)
                .map_err(|e| AppError::Input(e.to_string()))?;
            let mut r = Report::new("deform-check");
            r.set("algebra", name);
            match &check {
                DeformationCheck::Pass => {
                    r.set("verdict", "pass");
                    let mut specials = Vec::new();
                    for t in [Rational::one(), -Rational::one(), Rational::from_int(2)] {
                        let mu_t = deform::specialize(&mu0, &c1, &c2, &t);
                        let lt = mu_t.into_algebra_unchecked(l.basis_names().to_vec());
                        specials.push(Value::Str(format!(
                            "t={t}: jacobi {}",
                            if lt.jacobi_check().is_pass() {
                                "pass"
                            } else {
                                "FAIL"
                            }
                        )));
                    }
                    r.set("specializations", Value::List(specials));
                }
                DeformationCheck::Failed(ids) => {
                    r.set("verdict", "fail");
                    r.set(
                        "failed_identities",
                        Value::List(ids.iter().map(|s| Value::Str(s.clone())).collect()),
                    );
                }
            }
            Ok(Some(r))
        }
        Command::Contract {
            input,
            scaling,
            target,
            search_bound,
        } => {
            let (name, l) = resolve_input(&input)?;
            if let Some(target) = target {
                let (tname, t) = resolve_target(&target)?;
                let mut r = Report::new("contract-search");
                r.set("algebra", name);
                r.set("target", tname);
                r.set("search_bound", Value::Int(search_bound));
                match deform::search_diagonal_contraction(&l, &t, search_bound) {
                    Some(exponents) => {
                        r.set("result", "found");
                        r.set(
                            "exponents",
                            Value::List(exponents.iter().map(|&k| Value::Int(k)).collect()),
                        );
                    }
                    None => {
                        r.set("result", "not_found");
                        r.set(
                            "note",
                            "no diagonal power scaling inside the box; larger boxes or non-diagonal scalings may still work",
                        );
                    }
                }
                return Ok(Some(r));
            }
            let scaling = scaling.ok_or_else(|| {
                AppError::Input("contract needs --scaling FILE or --target ALGEBRA".into())
            })?;
            let text = std::fs::read_to_string(&scaling)
                .map_err(|e| AppError::Input(format!("{}: {e}", scaling.display())))?;
            let entries = dsl::parse_scaling(&text)
                .map_err(|e| AppError::Input(format!("{}:{e}", scaling.display())))?;
            if entries.len() != l.dim() {
                return Err(AppError::Input(format!(
                    "scaling has {} entries, algebra has dimension {}",
                    entries.len(),
                    l.dim()
                )));
            }
            let f = ScalingMap::diagonal(entries).map_err(|e| AppError::Input(e.to_string()))?;
            let mut r = Report::new("contract");
            r.set("algebra", name);
            match deform::contract(&l, &f).map_err(|e| AppError::Input(e.to_string()))? {
                Contraction::Limit(limit) => {
                    r.set("result", "limit");
                    r.set(
                        "jacobi",
                        if limit.jacobi_check().is_pass() {
                            "pass"
                        } else {
                            "FAIL"
                        },
                    );
                    r.set("limit", algebra_lines(&limit));
                }
                Contraction::NoLimit(offending) => {
                    r.set("result", "no_limit");
                    r.set(
                        "offending",
                        Value::List(
                            offending
                                .iter()
                                .map(|((i, j, k), p)| {
                                    Value::Str(format!(
                                        "mu_t({},{}) -> {}: {}",
                                        l.basis_names()[*i],
                                        l.basis_names()[*j],
                                        l.basis_names()[*k],
                                        p
                                    ))
                                })
                                .collect(),
                        ),
                    );
                }
            }
            Ok(Some(r))
        }
        Command::Catalog {
            catalog: id,
            params,
            syntax,
        } => match id {
            None => {
                let mut r = Report::new("catalog");
                let mut entries = Value::map();
                for info in catalog::list_entries() {
                    let mut fields = Value::map();
                    fields.insert("params".into(), Value::Str(info.param_schema.to_string()));
                    fields.insert("summary".into(), Value::Str(info.summary.to_string()));
                    entries.insert(info.id.to_string(), Value::Map(fields));
                }
                r.set("entries", Value::Map(entries));
                Ok(Some(r))
            }
            Some(id) => {
                let params = Params::parse(&params)?;
                let entry = catalog::build(&id, &params)?;
                let syntax = match syntax.as_str() {
                    "bracket" => dsl::Syntax::Bracket,
                    "mc" => dsl::Syntax::MaurerCartan,
                    other => {
                        return Err(AppError::Input(format!(
                            "unknown syntax `{other}` (bracket|mc)"
                        )))
                    }
                };
                let doc = dsl::document_from_algebra(&entry.algebra, &entry.id, syntax);
                print!("{}", dsl::render_document(&doc));
                Ok(None)
            }
        },
        Command::Verify {
            catalog: id,
            params,
            sampling,
        } => {
            let params = Params::parse(&params)?;
            let entry = catalog::build(&id, &params)?;
            let results = catalog::verify_entry(&entry, sampling.seed, sampling.budget);
            let mut r = Report::new("verify");
            r.set("catalog", entry.id.clone());
            if !entry.params.is_empty() {
                let mut p = Value::map();
                for (k, v) in &entry.params {
                    p.insert(k.clone(), Value::Str(v.clone()));
                }
                r.set("params", Value::Map(p));
            }
            if !entry.notes.is_empty() {
                r.set(
                    "notes",
                    Value::List(entry.notes.iter().map(|n| Value::Str(n.clone())).collect()),
                );
            }
            r.set("seed", Value::Int(sampling.seed as i64));
            r.set("budget", sampling.budget);
            let mut claims = Value::map();
            let mut all_pass = true;
            for res in &results {
                all_pass &= res.pass;
                let mut fields = BTreeMap::new();
                fields.insert("expected".to_string(), Value::Str(res.expected.clone()));
                fields.insert("computed".to_string(), Value::Str(res.computed.clone()));
                fields.insert(
                    "verdict".to_string(),
                    Value::Str(if res.pass { "pass" } else { "FAIL" }.to_string()),
                );
                fields.insert("mode".to_string(), Value::Str(res.mode.to_string()));
                fields.insert("source".to_string(), Value::Str(res.source.clone()));
                claims.insert(res.key.clone(), Value::Map(fields));
            }
            r.set("claims", Value::Map(claims));
            r.set("all_pass", all_pass);
            if cli.json {
                print!("{}", r.render_json());
            } else {
                print!("{}", r.render_text());
            }
            if all_pass {
                Ok(None)
            } else {
                Err(AppError::Negative)
            }
        }
    }
}
