//! Command-line front end: runs the kernel checks and emits deterministic
//! JSON reports on stdout. Exit codes: 0 pass, 1 fail/infeasible, 2 usage or
//! parse error.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use superw22::algebra::{
    generation_closure, jacobi_check, skew_check, standard_seed, BracketTable, Element,
};
use superw22::classify::{classify, ClassifyFamilies, FinalClass};
use superw22::involution::{axiom_check, unitary_weights, InvolutionSpec, UnitaryOutcome};
use superw22::repmod::{module_axiom_check, CoefficientTable, SuperModuleSpec, VirasoroFamily};
use superw22::report::{Report, Status, Violation};
use superw22::Scalar;

#[derive(Parser)]
#[command(
    name = "superw22",
    version,
    about = "Exact-arithmetic kernel for a Z-graded Lie superalgebra extending W(2,2)"
)]
struct Cli {
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the superbracket of two element expressions.
    Bracket {
        /// Left element, e.g. "L[2]" or "L[3] + (1/2)*I[-1]".
        x: String,
        /// Right element.
        y: String,
    },
    /// Verify the graded Leibniz identity on all basis triples in a window.
    Jacobi {
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// Verify super-skew-symmetry on all basis pairs in a window.
    Skew {
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// Check that the ten-generator seed reaches the whole window under brackets.
    Generators {
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Verify the graded module axioms for a chosen weight module.
    ModuleCheck {
        /// Virasoro action kind: Aab, Aalpha or Bbeta.
        #[arg(long, default_value = "Aab")]
        family: String,
        /// Parameter a (or alpha/beta for the one-parameter families).
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        a: String,
        /// Parameter b (Aab only).
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b: String,
        /// Odd-part parameter a (defaults to --a).
        #[arg(long, allow_hyphen_values = true)]
        a2: Option<String>,
        /// Odd-part parameter b (defaults to --b).
        #[arg(long, allow_hyphen_values = true)]
        b2: Option<String>,
        /// Coefficient table file; omitted means the trivial (zero) table.
        #[arg(long)]
        coeffs: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Solve the coefficient functional equations and classify the result.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        a2: String,
        #[arg(long, allow_hyphen_values = true)]
        b2: String,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Verify the anti-involution axioms for a spec file.
    InvolutionCheck {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 5)]
        window: i64,
    },
    /// Solve for diagonal unitary-form weights on the trivial extension of A_{a,b}.
    Unitary {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            let text = report.to_json_pretty();
            print!("{}", text);
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return ExitCode::from(2);
                }
            }
            match report.status {
                Status::Pass => ExitCode::SUCCESS,
                Status::Fail | Status::Infeasible => ExitCode::from(1),
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn parse_scalar(name: &str, text: &str) -> Result<Scalar, String> {
    Scalar::from_str(text).map_err(|e| format!("invalid scalar for --{}: {}", name, e))
}

fn parse_el(name: &str, text: &str) -> Result<Element, String> {
    text.parse::<Element>()
        .map_err(|e| format!("invalid element for {}: {}", name, e))
}

fn window_violations(report: &superw22::algebra::WindowReport) -> Vec<Violation> {
    report.violations.iter().map(Violation::from).collect()
}

fn run(cmd: &Cmd) -> Result<Report, String> {
    match cmd {
        Cmd::Bracket { x, y } => {
            let ex = parse_el("x", x)?;
            let ey = parse_el("y", y)?;
            let result = superw22::bracket(&ex, &ey);
            let mut report = Report::new("bracket");
            report.param("x", &ex);
            report.param("y", &ey);
            report.derive("result", result.to_string());
            report.derive("parity", format!("{:?}", result.parity()).to_lowercase());
            report.finish_status();
            Ok(report)
        }
        Cmd::Jacobi { window } => check_window("jacobi", *window, |n| {
            jacobi_check(&BracketTable::standard(), n)
        }),
        Cmd::Skew { window } => check_window("skew", *window, |n| {
            skew_check(&BracketTable::standard(), n)
        }),
        Cmd::Generators { window } => {
            if *window < 2 {
                return Err("--window must be at least 2".into());
            }
            let closure = generation_closure(&standard_seed(), *window);
            let mut report = Report::new("generators");
            report.window = Some(*window);
            report.param(
                "seed",
                standard_seed()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
            report.derive("reached", closure.reached.len());
            report.derive("total", closure.reached.len() + closure.missing.len());
            report.derive("span_dimension", closure.span_dimension);
            report.derive(
                "missing",
                closure
                    .missing
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            );
            for g in &closure.missing {
                report.violations.push(Violation {
                    indices: vec![g.degree],
                    lhs: g.to_string(),
                    relation: "generation-closure".into(),
                    rhs: "reachable from the seed".into(),
                });
            }
            report.finish_status();
            Ok(report)
        }
        Cmd::ModuleCheck {
            family,
            a,
            b,
            a2,
            b2,
            coeffs,
            window,
        } => {
            if *window < 1 {
                return Err("--window must be at least 1".into());
            }
            let sa = parse_scalar("a", a)?;
            let sb = parse_scalar("b", b)?;
            let sa2 = match a2 {
                Some(t) => parse_scalar("a2", t)?,
                None => sa.clone(),
            };
            let sb2 = match b2 {
                Some(t) => parse_scalar("b2", t)?,
                None => sb.clone(),
            };
            let make = |p: &Scalar, q: &Scalar| -> Result<VirasoroFamily, String> {
                match family.as_str() {
                    "Aab" => Ok(VirasoroFamily::Aab {
                        a: p.clone(),
                        b: q.clone(),
                    }),
                    "Aalpha" => Ok(VirasoroFamily::Aalpha { alpha: p.clone() }),
                    "Bbeta" => Ok(VirasoroFamily::Bbeta { beta: p.clone() }),
                    other => Err(format!(
                        "unknown --family {:?}; expected Aab, Aalpha or Bbeta",
                        other
                    )),
                }
            };
            let even = make(&sa, &sb)?;
            let odd = make(&sa2, &sb2)?;
            let radius = 3 * window;
            let table = match coeffs {
                Some(path) => CoefficientTable::load(path, radius)
                    .map_err(|e| format!("cannot load {}: {}", path.display(), e))?,
                None => CoefficientTable::zero(radius),
            };
            let spec = SuperModuleSpec {
                even,
                odd,
                coeffs: table,
            };
            let check = module_axiom_check(&spec, *window).map_err(|e| e.to_string())?;
            let mut report = Report::new("module-check");
            report.window = Some(*window);
            report.param("family", family);
            report.param("a", &sa);
            report.param("b", &sb);
            report.param("a2", &sa2);
            report.param("b2", &sb2);
            if let Some(path) = coeffs {
                report.param("coeffs", path.display().to_string());
            }
            report.derive("checked", check.checked);
            for v in &check.violations {
                report.violations.push(Violation {
                    indices: v.indices.clone(),
                    lhs: v.lhs.clone(),
                    relation: format!("module-axiom({},{} on {})", v.x, v.y, v.basis),
                    rhs: v.rhs.clone(),
                });
            }
            report.finish_status();
            Ok(report)
        }
        Cmd::Classify {
            a,
            b,
            a2,
            b2,
            window,
        } => {
            if *window < 4 {
                return Err("--window must be at least 4".into());
            }
            let sa = parse_scalar("a", a)?;
            let sb = parse_scalar("b", b)?;
            let sa2 = parse_scalar("a2", a2)?;
            let sb2 = parse_scalar("b2", b2)?;
            let families = ClassifyFamilies::aab(sa.clone(), sb.clone(), sa2.clone(), sb2.clone());
            let outcome = classify(&families, *window);
            let verdict = &outcome.verdict;
            let mut report = Report::new("classify");
            report.window = Some(*window);
            report.param("a", &sa);
            report.param("b", &sb);
            report.param("a2", &sa2);
            report.param("b2", &sb2);
            report.derive("core", outcome.core);
            report.derive(
                "dims",
                serde_json::Value::Object(
                    verdict
                        .dims
                        .iter()
                        .map(|(k, v)| (k.clone(), serde_json::Value::from(*v)))
                        .collect(),
                ),
            );
            report.derive(
                "raw_dims",
                serde_json::Value::Object(
                    outcome
                        .solutions
                        .iter()
                        .map(|s| {
                            (
                                s.target.label().to_string(),
                                serde_json::Value::from(s.raw_dim),
                            )
                        })
                        .collect(),
                ),
            );
            report.derive(
                "basis_patterns",
                serde_json::Value::Object(
                    verdict
                        .patterns
                        .iter()
                        .map(|(k, v)| (k.clone(), serde_json::Value::from(v.clone())))
                        .collect(),
                ),
            );
            report.derive("case_tags", verdict.case_tags.clone());
            report.derive("forced_zero", verdict.forced_zero.clone());
            report.derive("product_constraints", verdict.product_constraints.clone());
            report.derive("equations", verdict.equations);
            report.derive("final", verdict.final_class.to_string());
            match &verdict.out_of_case_table {
                Some(msg) => report.derive("out_of_case_table", msg.clone()),
                None => report.derive("out_of_case_table", serde_json::Value::Null),
            }
            if verdict.final_class == FinalClass::Witness {
                for f in ["f", "ft", "h", "ht"] {
                    if !verdict.forced_zero.contains(&f.to_string()) {
                        report.violations.push(Violation {
                            indices: vec![],
                            lhs: format!("dim {}", verdict.dims[f]),
                            relation: format!("nonzero-coefficient-space({})", f),
                            rhs: "forced zero".into(),
                        });
                    }
                }
                if let Some(msg) = &verdict.out_of_case_table {
                    report.violations.push(Violation {
                        indices: vec![],
                        lhs: msg.clone(),
                        relation: "out-of-case-table".into(),
                        rhs: String::new(),
                    });
                }
                if verdict.dims["g"] > 0
                    && verdict.dims["gt"] > 0
                    && verdict.product_constraints.is_empty()
                    && verdict.out_of_case_table.is_none()
                {
                    report.violations.push(Violation {
                        indices: vec![],
                        lhs: "g, gt both nonzero".into(),
                        relation: "unresolved-product(g,gt)".into(),
                        rhs: "g*gt = 0".into(),
                    });
                }
            }
            report.finish_status();
            Ok(report)
        }
        Cmd::InvolutionCheck { spec, window } => {
            if *window < 2 {
                return Err("--window must be at least 2".into());
            }
            let inv = InvolutionSpec::load(spec)
                .map_err(|e| format!("cannot load {}: {}", spec.display(), e))?;
            let check = axiom_check(&inv, *window);
            let mut report = Report::new("involution-check");
            report.window = Some(*window);
            for (k, v) in inv.params_echo() {
                report.param(&k, v);
            }
            report.derive("checked", check.checked);
            report.derive("constraint_violations", check.constraint_violations.clone());
            report.violations = check.violations.iter().map(Violation::from).collect();
            report.finish_status();
            Ok(report)
        }
        Cmd::Unitary { spec, a, b, window } => {
            if *window < 1 {
                return Err("--window must be at least 1".into());
            }
            let inv = InvolutionSpec::load(spec)
                .map_err(|e| format!("cannot load {}: {}", spec.display(), e))?;
            let sa = parse_scalar("a", a)?;
            let sb = parse_scalar("b", b)?;
            let mut report = Report::new("unitary");
            report.window = Some(*window);
            for (k, v) in inv.params_echo() {
                report.param(&k, v);
            }
            report.param("a", &sa);
            report.param("b", &sb);
            report.derive("re_b_required", "-1/2");
            report.derive("re_b_classical", "1/2");
            report.derive(
                "re_b_note",
                "with real alpha and real a, the diagonal adjointness equations force \
                 Re(b) = -1/2 under the action convention L_i u_j = (a-j+ib) u_{i+j}; the \
                 classical Virasoro unitary intermediate series is usually quoted with \
                 Re(b) = +1/2 (opposite weight-sign convention)",
            );
            match unitary_weights(&inv, &sa, &sb, *window) {
                UnitaryOutcome::Weights(w) => {
                    report.derive(
                        "weights",
                        serde_json::Value::Object(
                            w.weights
                                .iter()
                                .map(|(j, v)| {
                                    (j.to_string(), serde_json::Value::from(v.to_string()))
                                })
                                .collect(),
                        ),
                    );
                    report.derive("notes", w.notes.clone());
                    report.finish_status();
                }
                UnitaryOutcome::Infeasible(w) => {
                    report.status = Status::Infeasible;
                    report.derive("infeasible_reason", w.reason.clone());
                    report.violations.push(Violation {
                        indices: vec![w.m, w.j],
                        lhs: w.lhs,
                        relation: "adjointness".into(),
                        rhs: w.rhs,
                    });
                }
            }
            Ok(report)
        }
    }
}

fn check_window(
    name: &str,
    window: i64,
    check: impl Fn(i64) -> superw22::algebra::WindowReport,
) -> Result<Report, String> {
    if window < 1 {
        return Err("--window must be at least 1".into());
    }
    let result = check(window);
    let mut report = Report::new(name);
    report.window = Some(window);
    report.derive("checked", result.checked);
    report.derive("notes", result.notes.clone());
    report.violations = window_violations(&result);
    report.finish_status();
    Ok(report)
}
