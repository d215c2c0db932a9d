//! Command-line surface: load definition files, run verification, analysis,
//! invariant and integrality pipelines, and render deterministic reports.
//!
//! Exit codes: 0 = all checks passed / witness found as expected;
//! 1 = a mathematical check failed or a witness was absent where demanded;
//! 2 = input or parse error; 3 = resource bound exceeded.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfact_core::action::{
    algebra_generators, frobenius_chain, integrality_witness, invariants, pth_power_bound_check,
    verify_action, ActionSpec, InvariantSubset, PthPowerOutcome, WitnessOutcome,
};
use hopfact_core::commalg::FPCommAlgebra;
use hopfact_core::error::Error as CoreError;
use hopfact_core::field::FieldSpec;
use hopfact_core::hopf::{verify_hopf_axioms, VerifiedHopf};
use hopfact_core::models;
use hopfact_core::schema;
use hopfact_core::structure::{self, grouplikes};

use report::{Entry, Report};

#[derive(Parser)]
#[command(
    name = "hopfact",
    about = "Exact computations with finite-dimensional Hopf algebras and their actions",
    version
)]
struct Cli {
    /// Emit the machine-readable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify and analyze Hopf algebra definition files
    Hopf {
        #[command(subcommand)]
        cmd: HopfCmd,
    },
    /// Verify actions, compute invariants and integrality witnesses
    Act {
        #[command(subcommand)]
        cmd: ActCmd,
    },
    /// Built-in models and end-to-end demonstrations
    Demo {
        #[command(subcommand)]
        cmd: DemoCmd,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Run the seven exact axiom checks on a definition file
    Verify { file: PathBuf },
    /// Group-likes, integrals, semisimplicity, coradical filtration,
    /// pointed/connected classification
    Analyze { file: PathBuf },
    /// Quotient by the two-sided ideal generated by the given elements
    Quotient {
        file: PathBuf,
        /// Comma-separated element expressions, e.g. "g - 1"
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
        /// Write the quotient as a definition file
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ActCmd {
    /// Verify the module-algebra axioms on a degree-truncated workspace
    Verify {
        hopf: PathBuf,
        algebra: PathBuf,
        action: PathBuf,
        #[arg(long, default_value_t = 8)]
        degree: u32,
    },
    /// Invariant subalgebra basis on the degree truncation
    Invariants {
        hopf: PathBuf,
        algebra: PathBuf,
        action: PathBuf,
        /// H = full Hopf algebra, G = group-likes only
        #[arg(long, value_enum, ignore_case = true)]
        sub: SubChoice,
        #[arg(long, default_value_t = 8)]
        degree: u32,
    },
    /// Search for a monic dependence of an element over a subalgebra
    Integrality {
        hopf: PathBuf,
        algebra: PathBuf,
        action: PathBuf,
        /// The element, in polynomial syntax
        #[arg(long)]
        element: String,
        /// Which subalgebra the coefficients live in
        #[arg(long, value_enum, ignore_case = true)]
        over: OverChoice,
        /// Explicit generators (polynomial syntax) for --over gens
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        /// Invariant truncation degree used to extract generators
        #[arg(long, default_value_t = 8)]
        degree: u32,
        #[arg(long = "monic-deg", default_value_t = 8)]
        monic_deg: u32,
        #[arg(long = "coeff-deg", default_value_t = 8)]
        coeff_deg: u32,
        /// Succeed when no witness exists up to the bounds
        #[arg(long)]
        expect_none: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SubChoice {
    #[value(name = "H")]
    H,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum OverChoice {
    #[value(name = "H")]
    H,
    #[value(name = "G")]
    G,
    #[value(name = "gens")]
    Gens,
}

#[derive(Subcommand)]
enum DemoCmd {
    /// Reproduce the nilpotent counterexample: A^G = k[y] truncated,
    /// A^H = k, and no monic dependence of y over A^H up to the bounds
    Counterexample(CounterexampleArgs),
    /// The positive characteristic-p case: invariant p-th powers, the
    /// Frobenius chain, and the p-th power bound check
    Charp(CharpArgs),
    /// Write a built-in model to definition files
    Dump {
        /// taft | sweedler | cyclic | s3 | example31
        #[arg(long)]
        model: String,
        #[arg(long = "N", default_value_t = 2)]
        n: u32,
        /// Prime characteristic (omit for characteristic 0)
        #[arg(long)]
        p: Option<u32>,
        /// Output path prefix
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct CounterexampleArgs {
    #[arg(long = "N", default_value_t = 2)]
    n: u32,
    #[arg(long, default_value_t = 8)]
    degree: u32,
}

#[derive(Args)]
struct CharpArgs {
    #[arg(long, default_value_t = 3)]
    p: u32,
    #[arg(long = "N", default_value_t = 2)]
    n: u32,
    #[arg(long, default_value_t = 8)]
    degree: u32,
    #[arg(long, default_value_t = 1)]
    depth: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_class(&err))
        }
    }
}

fn exit_class(e: &CoreError) -> u8 {
    match e {
        CoreError::Parse(_)
        | CoreError::Dimension(_)
        | CoreError::InvalidField(_)
        | CoreError::FieldMismatch { .. }
        | CoreError::DivisionByZero
        | CoreError::Unsupported(_) => 2,
        CoreError::BudgetExceeded(_)
        | CoreError::ResourceLimit(_)
        | CoreError::WorkspaceOverflow { .. } => 3,
        CoreError::Structural(_) | CoreError::Inconclusive(_) => 1,
    }
}

fn read_file(path: &Path) -> Result<String, CoreError> {
    std::fs::read_to_string(path).map_err(|e| CoreError::Parse(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CoreError> {
    std::fs::write(path, contents).map_err(|e| CoreError::Parse(format!("{}: {e}", path.display())))
}

fn load_hopf(path: &Path) -> Result<hopfact_core::hopf::HopfAlgebraData, CoreError> {
    let raw = read_file(path)?;
    let doc: schema::HopfDoc = schema::from_json_str(&raw)?;
    schema::hopf_from_doc(&doc)
}

fn load_verified_hopf(path: &Path) -> Result<VerifiedHopf, CoreError> {
    load_hopf(path)?.verified()
}

fn load_algebra(path: &Path) -> Result<FPCommAlgebra, CoreError> {
    let raw = read_file(path)?;
    let doc: schema::AlgebraDoc = schema::from_json_str(&raw)?;
    schema::algebra_from_doc(&doc)
}

fn load_action(path: &Path, h: &VerifiedHopf, a: &FPCommAlgebra) -> Result<ActionSpec, CoreError> {
    let raw = read_file(path)?;
    let doc: schema::ActionDoc = schema::from_json_str(&raw)?;
    schema::action_from_doc(&doc, h, a)
}

fn run(command: &Command) -> Result<Report, CoreError> {
    match command {
        Command::Hopf { cmd } => run_hopf(cmd),
        Command::Act { cmd } => run_act(cmd),
        Command::Demo { cmd } => run_demo(cmd),
    }
}

// ---------------------------------------------------------------------------
// hopf subcommands
// ---------------------------------------------------------------------------

fn run_hopf(cmd: &HopfCmd) -> Result<Report, CoreError> {
    match cmd {
        HopfCmd::Verify { file } => {
            let h = load_hopf(file)?;
            let mut report = Report::new(format!("hopf verify {}", file.display()));
            report.push(Entry::info(
                "input",
                Some(format!("dim {} over {}", h.dim(), h.field())),
            ));
            let axioms = verify_hopf_axioms(&h);
            for check in &axioms.checks {
                report.push(Entry::check(
                    check.name,
                    check.passed,
                    check.witness.clone(),
                ));
            }
            Ok(report)
        }
        HopfCmd::Analyze { file } => {
            let h = load_verified_hopf(file)?;
            let analysis = structure::analyze(&h, None)?;
            let mut report = Report::new(format!("hopf analyze {}", file.display()));
            report.push(Entry::info(
                "input",
                Some(format!("dim {} over {}", h.dim(), h.field())),
            ));
            let mut gl = Entry::info(
                "grouplikes",
                Some(format!("count {}", analysis.grouplikes.len())),
            );
            for g in &analysis.grouplikes.elements {
                gl.children
                    .push(Entry::info("element", Some(h.display_element(g))));
            }
            report.push(gl);
            report.push(Entry::check(
                "left integral space one-dimensional",
                analysis.integral_space.dim() == 1,
                Some(format!(
                    "dim {}; integral: {}",
                    analysis.integral_space.dim(),
                    h.display_element(&analysis.semisimple.integral)
                )),
            ));
            report.push(Entry::info(
                "semisimple",
                Some(format!(
                    "{} (eps(t) = {})",
                    analysis.semisimple.semisimple, analysis.semisimple.counit_value
                )),
            ));
            report.push(Entry::info(
                "coradical",
                Some(format!(
                    "dim {}{}",
                    analysis.coradical.dim(),
                    if analysis.coradical_from_hint {
                        " (from group-like hint; small characteristic)"
                    } else {
                        ""
                    }
                )),
            ));
            report.push(Entry::info(
                "filtration layer dims",
                Some(format!("{:?}", analysis.filtration.layer_dims())),
            ));
            report.push(Entry::check(
                "filtration laws",
                analysis.filtration_report.all_passed(),
                None,
            ));
            report.push(Entry::info(
                "pointed",
                Some(analysis.classification.pointed.to_string()),
            ));
            report.push(Entry::info(
                "connected",
                Some(analysis.classification.connected.to_string()),
            ));
            Ok(report)
        }
        HopfCmd::Quotient { file, gens, out } => {
            let h = load_verified_hopf(file)?;
            let elements = gens
                .iter()
                .map(|g| h.parse_element(g))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = structure::ideal_generated(&h, &elements);
            let flags = structure::verify_hopf_ideal(&h, &ideal);
            let mut report = Report::new(format!("hopf quotient {}", file.display()));
            report.push(Entry::info("ideal", Some(format!("dim {}", ideal.dim()))));
            report.push(Entry::check("two-sided ideal", flags.two_sided_ideal, None));
            report.push(Entry::check("coideal", flags.coideal, None));
            report.push(Entry::check("counit vanishes", flags.counit_zero, None));
            report.push(Entry::check("antipode stable", flags.antipode_stable, None));
            if !flags.is_hopf_ideal() {
                return Ok(report);
            }
            let (q, _proj) = structure::quotient_hopf(&h, &ideal)?;
            report.push(Entry::pass(
                "quotient Hopf algebra",
                Some(format!("dim {}, all axioms verified", q.dim())),
            ));
            let gl = grouplikes(&q)?;
            report.push(Entry::info(
                "quotient grouplikes",
                Some(format!("count {}", gl.len())),
            ));
            if let Some(out_path) = out {
                let doc = schema::hopf_to_doc(q.data());
                write_file(out_path, &schema::to_json_string(&doc)?)?;
                report.push(Entry::info("written", Some(out_path.display().to_string())));
            }
            Ok(report)
        }
    }
}

// ---------------------------------------------------------------------------
// act subcommands
// ---------------------------------------------------------------------------

struct LoadedAction {
    hopf: VerifiedHopf,
    algebra: FPCommAlgebra,
    spec: ActionSpec,
}

fn load_triple(hopf: &Path, algebra: &Path, action: &Path) -> Result<LoadedAction, CoreError> {
    let h = load_verified_hopf(hopf)?;
    let a = load_algebra(algebra)?;
    let spec = load_action(action, &h, &a)?;
    Ok(LoadedAction {
        hopf: h,
        algebra: a,
        spec,
    })
}

fn push_action_checks(
    report: &mut Report,
    la: &LoadedAction,
    degree: u32,
) -> Result<bool, CoreError> {
    if !la.algebra.relations_homogeneous() {
        report.push(Entry::info(
            "warning",
            Some(
                "relations are not homogeneous; degree truncation is a workspace, not a grading"
                    .into(),
            ),
        ));
    }
    let action_report = verify_action(&la.hopf, &la.algebra, &la.spec, degree)?;
    for check in &action_report.checks {
        report.push(Entry::check(
            check.name,
            check.passed,
            check.witness.clone(),
        ));
    }
    Ok(action_report.all_passed())
}

fn run_act(cmd: &ActCmd) -> Result<Report, CoreError> {
    match cmd {
        ActCmd::Verify {
            hopf,
            algebra,
            action,
            degree,
        } => {
            let la = load_triple(hopf, algebra, action)?;
            let mut report = Report::new(format!("act verify (degree {degree})"));
            push_action_checks(&mut report, &la, *degree)?;
            Ok(report)
        }
        ActCmd::Invariants {
            hopf,
            algebra,
            action,
            sub,
            degree,
        } => {
            let la = load_triple(hopf, algebra, action)?;
            let mut report = Report::new(format!("act invariants (degree {degree})"));
            if !push_action_checks(&mut report, &la, (*degree).min(4))? {
                return Ok(report);
            }
            let space = match sub {
                SubChoice::H => invariants(
                    &la.hopf,
                    &la.algebra,
                    &la.spec,
                    InvariantSubset::FullHopf,
                    *degree,
                )?,
                SubChoice::G => {
                    let gl = grouplikes(&la.hopf)?;
                    invariants(
                        &la.hopf,
                        &la.algebra,
                        &la.spec,
                        InvariantSubset::GroupLikes(&gl),
                        *degree,
                    )?
                }
            };
            let mut basis = Entry::info("invariant basis", Some(format!("dim {}", space.dim())));
            for p in space.basis_polys() {
                basis
                    .children
                    .push(Entry::info("element", Some(la.algebra.display(&p))));
            }
            report.push(basis);
            Ok(report)
        }
        ActCmd::Integrality {
            hopf,
            algebra,
            action,
            element,
            over,
            gens,
            degree,
            monic_deg,
            coeff_deg,
            expect_none,
        } => {
            let la = load_triple(hopf, algebra, action)?;
            let mut report = Report::new(format!(
                "act integrality (monic <= {monic_deg}, coefficient degree <= {coeff_deg})"
            ));
            if !push_action_checks(&mut report, &la, (*degree).min(4))? {
                return Ok(report);
            }
            let elem = la.algebra.parse(element)?;
            let sub_gens: Vec<hopfact_core::commalg::Poly> = match over {
                OverChoice::Gens => gens
                    .iter()
                    .map(|g| la.algebra.parse(g))
                    .collect::<Result<_, _>>()?,
                OverChoice::H => {
                    let inv = invariants(
                        &la.hopf,
                        &la.algebra,
                        &la.spec,
                        InvariantSubset::FullHopf,
                        *degree,
                    )?;
                    algebra_generators(&la.algebra, &inv.basis_polys())?
                }
                OverChoice::G => {
                    let gl = grouplikes(&la.hopf)?;
                    let inv = invariants(
                        &la.hopf,
                        &la.algebra,
                        &la.spec,
                        InvariantSubset::GroupLikes(&gl),
                        *degree,
                    )?;
                    algebra_generators(&la.algebra, &inv.basis_polys())?
                }
            };
            let shown: Vec<String> = sub_gens.iter().map(|g| la.algebra.display(g)).collect();
            report.push(Entry::info(
                "subalgebra generators",
                Some(format!("[{}]", shown.join(", "))),
            ));
            let outcome =
                integrality_witness(&la.algebra, &elem, &sub_gens, *monic_deg, *coeff_deg)?;
            match (&outcome, expect_none) {
                (WitnessOutcome::Witness(w), false) => {
                    report.push(Entry::pass("witness", Some(w.display_with(&la.algebra))))
                }
                (WitnessOutcome::Witness(w), true) => report.push(Entry::fail(
                    "witness found but none expected",
                    Some(w.display_with(&la.algebra)),
                )),
                (
                    WitnessOutcome::NoneUpToBounds {
                        monic_bound,
                        coeff_bound,
                    },
                    false,
                ) => report.push(Entry::fail(
                    "no witness",
                    Some(format!("none up to ({monic_bound}, {coeff_bound})")),
                )),
                (
                    WitnessOutcome::NoneUpToBounds {
                        monic_bound,
                        coeff_bound,
                    },
                    true,
                ) => report.push(Entry::pass(
                    "no witness, as expected",
                    Some(format!("none up to ({monic_bound}, {coeff_bound})")),
                )),
            }
            Ok(report)
        }
    }
}

// ---------------------------------------------------------------------------
// demo subcommands
// ---------------------------------------------------------------------------

fn run_demo(cmd: &DemoCmd) -> Result<Report, CoreError> {
    match cmd {
        DemoCmd::Counterexample(args) => demo_counterexample(args),
        DemoCmd::Charp(args) => demo_charp(args),
        DemoCmd::Dump { model, n, p, out } => demo_dump(model, *n, *p, out),
    }
}

fn counterexample_field(n: u32, p: Option<u32>) -> Result<FieldSpec, CoreError> {
    match p {
        Some(p) => FieldSpec::prime(p),
        None if n == 2 => Ok(FieldSpec::Rational),
        None => FieldSpec::cyclotomic(n),
    }
}

fn demo_counterexample(args: &CounterexampleArgs) -> Result<Report, CoreError> {
    let field = counterexample_field(args.n, None)?;
    let degree = args.degree;
    let bundle = models::example31(args.n, field.clone(), degree)?;
    let mut report = Report::new(format!(
        "demo counterexample (N = {}, degree {degree}, field {field})",
        args.n
    ));
    report.push(Entry::check(
        "Hopf axioms",
        verify_hopf_axioms(bundle.hopf.data()).all_passed(),
        None,
    ));
    let action_report =
        verify_action(&bundle.hopf, &bundle.algebra, &bundle.action, degree.min(6))?;
    report.push(Entry::check(
        "module-algebra action verified",
        action_report.all_passed(),
        None,
    ));

    let gl = grouplikes(&bundle.hopf)?;
    let g_inv = invariants(
        &bundle.hopf,
        &bundle.algebra,
        &bundle.action,
        InvariantSubset::GroupLikes(&gl),
        degree,
    )?;
    let mut g_ok = g_inv.dim() == (degree + 1) as usize;
    for j in 0..=degree {
        let yj = bundle.algebra.pow_nf(&bundle.algebra.var(0), j);
        g_ok &= g_inv.subspace.contains(&g_inv.workspace.to_coords(&yj)?);
    }
    let g_basis: Vec<String> = g_inv
        .basis_polys()
        .iter()
        .map(|p| bundle.algebra.display(p))
        .collect();
    report.push(Entry::check(
        "A^G truncation is spanned by the powers of y",
        g_ok,
        Some(format!("basis [{}]", g_basis.join(", "))),
    ));

    let h_inv = invariants(
        &bundle.hopf,
        &bundle.algebra,
        &bundle.action,
        InvariantSubset::FullHopf,
        degree,
    )?;
    let h_basis: Vec<String> = h_inv
        .basis_polys()
        .iter()
        .map(|p| bundle.algebra.display(p))
        .collect();
    report.push(Entry::check(
        "A^H truncation = span{1}",
        h_inv.dim() == 1
            && h_inv
                .subspace
                .contains(&h_inv.workspace.to_coords(&bundle.algebra.one())?),
        Some(format!("basis [{}]", h_basis.join(", "))),
    ));

    let y = bundle.algebra.var(0);
    let over_h = integrality_witness(&bundle.algebra, &y, &[], degree, degree)?;
    report.push(match &over_h {
        WitnessOutcome::NoneUpToBounds { monic_bound, coeff_bound } => Entry::pass(
            "integrality of y over A^H",
            Some(format!(
                "none up to ({monic_bound}, {coeff_bound}) -- the extension is not integral up to these bounds"
            )),
        ),
        WitnessOutcome::Witness(w) => Entry::fail(
            "integrality of y over A^H",
            Some(format!("unexpected witness {}", w.display_with(&bundle.algebra))),
        ),
    });
    let over_g = integrality_witness(
        &bundle.algebra,
        &y,
        std::slice::from_ref(&y),
        degree,
        degree,
    )?;
    report.push(match &over_g {
        WitnessOutcome::Witness(w) if w.monic_degree == 1 => Entry::pass(
            "integrality of y over A^G",
            Some(format!("witness {}", w.display_with(&bundle.algebra))),
        ),
        _ => Entry::fail("integrality of y over A^G", None),
    });
    Ok(report)
}

fn demo_charp(args: &CharpArgs) -> Result<Report, CoreError> {
    let field = counterexample_field(args.n, Some(args.p))?;
    let degree = args.degree;
    let bundle = models::example31(args.n, field.clone(), degree)?;
    let mut report = Report::new(format!(
        "demo charp (p = {}, N = {}, degree {degree})",
        args.p, args.n
    ));
    report.push(Entry::check(
        "Hopf axioms",
        verify_hopf_axioms(bundle.hopf.data()).all_passed(),
        None,
    ));
    let action_report =
        verify_action(&bundle.hopf, &bundle.algebra, &bundle.action, degree.min(6))?;
    report.push(Entry::check(
        "module-algebra action verified",
        action_report.all_passed(),
        None,
    ));

    let gl = grouplikes(&bundle.hopf)?;
    let h_inv = invariants(
        &bundle.hopf,
        &bundle.algebra,
        &bundle.action,
        InvariantSubset::FullHopf,
        degree,
    )?;
    let basis: Vec<String> = h_inv
        .basis_polys()
        .iter()
        .map(|p| bundle.algebra.display(p))
        .collect();
    report.push(Entry::info(
        "A^H truncation basis",
        Some(format!("[{}]", basis.join(", "))),
    ));
    let h_gens = algebra_generators(&bundle.algebra, &h_inv.basis_polys())?;
    let shown: Vec<String> = h_gens.iter().map(|g| bundle.algebra.display(g)).collect();
    report.push(Entry::info(
        "A^H generators",
        Some(format!("[{}]", shown.join(", "))),
    ));

    let y = bundle.algebra.var(0);
    let outcome = integrality_witness(
        &bundle.algebra,
        &y,
        &h_gens,
        args.p.max(2).max(args.n),
        args.p.max(2).max(args.n),
    )?;
    report.push(match &outcome {
        WitnessOutcome::Witness(w) => Entry::pass(
            "integrality of y over A^H",
            Some(format!("witness {}", w.display_with(&bundle.algebra))),
        ),
        WitnessOutcome::NoneUpToBounds {
            monic_bound,
            coeff_bound,
        } => Entry::fail(
            "integrality of y over A^H",
            Some(format!("none up to ({monic_bound}, {coeff_bound})")),
        ),
    });

    let c0 = structure::coradical(&bundle.hopf, Some(&bundle.coradical_hint))?;
    let filt = structure::coradical_filtration(&bundle.hopf, &c0)?;
    let chain = frobenius_chain(
        &bundle.hopf,
        &bundle.algebra,
        &bundle.action,
        &gl,
        &filt,
        args.depth,
        degree,
    )?;
    let mut chain_entry = Entry::check(
        "Frobenius chain verified",
        chain.all_verified(),
        Some(format!("depth {}", args.depth)),
    );
    for (i, level) in chain.levels.iter().enumerate() {
        let gens: Vec<String> = level
            .generators
            .iter()
            .map(|g| bundle.algebra.display(g))
            .collect();
        chain_entry.children.push(Entry::check(
            format!("A_{i} generators [{}]", gens.join(", ")),
            level.annihilation_ok,
            Some(format!(
                "annihilated by the {} basis vectors of H_{i}^+",
                level.filtration_plus_dim
            )),
        ));
    }
    report.push(chain_entry);

    let pth = pth_power_bound_check(
        &bundle.hopf,
        &bundle.algebra,
        &bundle.action,
        &gl,
        degree,
        128,
    )?;
    report.push(match &pth {
        PthPowerOutcome::Inapplicable => {
            Entry::info("p-th power bound check", Some("inapplicable".into()))
        }
        PthPowerOutcome::Applicable {
            exponent,
            checked,
            skipped,
        } => Entry::check(
            "p-th power bound check",
            pth.all_passed(),
            Some(format!(
                "exponent p^dim = {exponent}; {} checked, {} skipped (workspace cap)",
                checked.len(),
                skipped.len()
            )),
        ),
    });
    Ok(report)
}

fn demo_dump(model: &str, n: u32, p: Option<u32>, out: &Path) -> Result<Report, CoreError> {
    let mut report = Report::new(format!("demo dump {model}"));
    let field_for = |default_rational: bool| -> Result<FieldSpec, CoreError> {
        match p {
            Some(p) => FieldSpec::prime(p),
            None if default_rational => Ok(FieldSpec::Rational),
            None => FieldSpec::cyclotomic(n),
        }
    };
    let write_hopf = |h: &VerifiedHopf, path: PathBuf| -> Result<PathBuf, CoreError> {
        let doc = schema::hopf_to_doc(h.data());
        write_file(&path, &schema::to_json_string(&doc)?)?;
        Ok(path)
    };
    match model {
        "taft" => {
            let field = field_for(n == 2)?;
            let h = models::taft(n, field, None)?;
            let path = write_hopf(&h, out.with_extension("json"))?;
            report.push(Entry::info("written", Some(path.display().to_string())));
        }
        "sweedler" => {
            let field = match p {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::Rational,
            };
            let h = models::sweedler(field)?;
            let path = write_hopf(&h, out.with_extension("json"))?;
            report.push(Entry::info("written", Some(path.display().to_string())));
        }
        "cyclic" => {
            let field = match p {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::Rational,
            };
            let h = models::group_algebra(&models::GroupTable::cyclic(n as usize)?, field)?;
            let path = write_hopf(&h, out.with_extension("json"))?;
            report.push(Entry::info("written", Some(path.display().to_string())));
        }
        "s3" => {
            let field = match p {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::Rational,
            };
            let h = models::group_algebra(&models::GroupTable::symmetric(3)?, field)?;
            let path = write_hopf(&h, out.with_extension("json"))?;
            report.push(Entry::info("written", Some(path.display().to_string())));
        }
        "example31" => {
            let field = field_for(n == 2)?;
            let bundle = models::example31(n, field, 8)?;
            let hopf_path = with_suffix(out, "hopf.json");
            let algebra_path = with_suffix(out, "algebra.json");
            let action_path = with_suffix(out, "action.json");
            write_file(
                &hopf_path,
                &schema::to_json_string(&schema::hopf_to_doc(bundle.hopf.data()))?,
            )?;
            write_file(
                &algebra_path,
                &schema::to_json_string(&schema::algebra_to_doc(&bundle.algebra))?,
            )?;
            let action_doc = schema::action_to_doc(
                &bundle.hopf,
                &bundle.algebra,
                &bundle.action,
                Some(hopf_path.display().to_string()),
                Some(algebra_path.display().to_string()),
            );
            write_file(&action_path, &schema::to_json_string(&action_doc)?)?;
            for path in [&hopf_path, &algebra_path, &action_path] {
                report.push(Entry::info("written", Some(path.display().to_string())));
            }
        }
        other => {
            return Err(CoreError::Parse(format!(
                "unknown model '{other}' (expected taft, sweedler, cyclic, s3 or example31)"
            )))
        }
    }
    Ok(report)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_os_string();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}
