use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use cliffideal::exterior::{clifford_hodge, wedge, ExteriorForm, HodgeConvention};
use cliffideal::ideal::{
    build_idempotent, check_decomposition, classify, decompose_algebra, is_primitive,
    left_ideal_basis, validate_generators, IdempotentSpec,
};
use cliffideal::io::json::{
    g2_from_json, g2_to_json, multivector_from_json, multivector_to_json, spin7_from_json,
    spin7_to_json, su3_from_json, su3_to_json,
};
use cliffideal::io::{parse_form, parse_generators, parse_multivector, to_json, Value};
use cliffideal::structures::{
    g2_idempotent, g2_metric, g2_recover, lift_idempotent_6_to_7, lift_su3_to_g2, model_g2,
    model_spin7, model_su3, spin7_idempotent, spin7_recover, su3_idempotent, su3_recover,
    G2Structure, Spin7Structure, SU3Structure,
};
use cliffideal::verifier::{golden_statuses, run_selected, Report};
use cliffideal::{ideal, Multivector, Signature};

#[derive(Parser)]
#[command(name = "cliffideal", version, about = "Exact Clifford algebra, primitive idempotents and special holonomy forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a product, wedge, dual, grade projection or reversion.
    Eval(EvalArgs),
    /// Validate generators, span the left ideal, or decompose the algebra.
    Idempotent(IdempotentArgs),
    /// Build, recover or validate an SU(3), G2 or Spin(7) structure.
    Structure(StructureArgs),
    /// Print the matrix algebra type of R_{p,q}.
    Classify { p: usize, q: usize },
    /// Recompute the catalog of published identities.
    VerifyPaper(VerifyArgs),
    /// Lift an SU(3) structure on R^6 to a G2 structure on R^7.
    Lift {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_parser = parse_sig)]
    sig: Signature,
    /// Expressions; "-" reads one from stdin. Put expressions starting with
    /// a minus sign after "--".
    #[arg(required = true)]
    exprs: Vec<String>,
    /// product | wedge | star=CONVENTION | grade=K | reverse
    #[arg(long, value_parser = parse_op)]
    op: Op,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Product,
    Wedge,
    Star(HodgeConvention),
    Grade(usize),
    Reverse,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["check", "ideal", "decompose"])))]
struct IdempotentArgs {
    #[arg(long, value_parser = parse_sig)]
    sig: Signature,
    #[arg(long, allow_hyphen_values = true)]
    gens: String,
    #[arg(long)]
    check: bool,
    #[arg(long)]
    ideal: bool,
    #[arg(long)]
    decompose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureKind {
    Su3,
    G2,
    Spin7,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["model", "input"])))]
#[command(group(ArgGroup::new("action").required(true).args(["to_idempotent", "recover", "validate"])))]
struct StructureArgs {
    kind: StructureKind,
    #[arg(long)]
    model: bool,
    /// Structure tensors as JSON, or a Clifford element with --recover.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    to_idempotent: bool,
    #[arg(long)]
    recover: bool,
    #[arg(long)]
    validate: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    claim: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// A failure carrying its exit code: 1 semantic, 2 parse or usage.
struct Failure {
    code: u8,
    message: String,
}

fn semantic(e: impl Display) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn parse_error(e: impl Display) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

fn parse_sig(s: &str) -> Result<Signature, String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let p = p.trim().parse().map_err(|_| format!("bad p in '{s}'"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q in '{s}'"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn parse_op(s: &str) -> Result<Op, String> {
    match s {
        "product" => Ok(Op::Product),
        "wedge" => Ok(Op::Wedge),
        "reverse" => Ok(Op::Reverse),
        _ => {
            if let Some(c) = s.strip_prefix("star=") {
                c.parse().map(Op::Star).map_err(|_| format!("unknown convention '{c}'"))
            } else if let Some(k) = s.strip_prefix("grade=") {
                k.parse().map(Op::Grade).map_err(|_| format!("bad grade '{k}'"))
            } else {
                Err(format!("unknown operation '{s}'"))
            }
        }
    }
}

fn read_expr(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(parse_error)?;
    Ok(buf.trim().to_string())
}

fn emit(value: Value, json: bool) {
    if json {
        println!("{}", to_json(&value));
    } else {
        println!("{value}");
    }
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let texts = args.exprs.iter().map(|e| read_expr(e)).collect::<Result<Vec<_>, _>>()?;
    let sig = args.sig;
    if let Op::Wedge = args.op {
        let forms = texts
            .iter()
            .map(|t| parse_form(t, sig.dim()))
            .collect::<Result<Vec<ExteriorForm>, _>>()
            .map_err(parse_error)?;
        let mut acc = forms[0].clone();
        for f in &forms[1..] {
            acc = wedge(&acc, f).map_err(semantic)?;
        }
        emit(Value::Form(acc), args.json);
        return Ok(());
    }
    let xs = texts
        .iter()
        .map(|t| parse_multivector(t, sig))
        .collect::<Result<Vec<Multivector>, _>>()
        .map_err(parse_error)?;
    let single = || -> Result<&Multivector, Failure> {
        match xs.as_slice() {
            [x] => Ok(x),
            _ => Err(parse_error("this operation takes exactly one expression")),
        }
    };
    let result = match args.op {
        Op::Product => {
            let mut acc = xs[0].clone();
            for x in &xs[1..] {
                acc = acc.geometric_product(x).map_err(semantic)?;
            }
            acc
        }
        Op::Star(c) => {
            if c.is_exterior() && sig.p() != 0 {
                return Err(semantic("exterior duals use the Euclidean metric; expected signature 0,n"));
            }
            clifford_hodge(single()?, c)
        }
        Op::Grade(k) => single()?.grade_project(k),
        Op::Reverse => single()?.reverse(),
        Op::Wedge => unreachable!(),
    };
    emit(Value::Clifford(result), args.json);
    Ok(())
}

fn cmd_idempotent(args: IdempotentArgs) -> Result<(), Failure> {
    let generators = parse_generators(&args.gens, args.sig).map_err(parse_error)?;
    let spec = IdempotentSpec::new(args.sig, generators);
    let report = validate_generators(&spec);
    if args.check {
        println!("generators: {}", spec.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));
        println!("expected count: {}", report.expected_count);
        println!("{report}");
        return if report.is_valid() { Ok(()) } else { Err(semantic("invalid generators")) };
    }
    if args.ideal {
        let f = build_idempotent(&spec).map_err(semantic)?;
        let ideal = left_ideal_basis(&f).map_err(semantic)?;
        println!("idempotent: {f}");
        println!("dimension: {}", ideal.dimension);
        println!("primitive: {}", is_primitive(&f));
        let basis: Vec<String> = ideal
            .generators
            .iter()
            .map(|b| if b.is_scalar() { "f".to_string() } else { format!("{b} f") })
            .collect();
        println!("basis: {}", basis.join(", "));
        return Ok(());
    }
    let pieces = decompose_algebra(&spec).map_err(semantic)?;
    for (i, piece) in pieces.iter().enumerate() {
        println!("f{}: {piece}", i + 1);
    }
    let check = check_decomposition(&pieces).map_err(semantic)?;
    println!("pieces: {}", pieces.len());
    println!("idempotent: {}", check.all_idempotent);
    println!("pairwise orthogonal: {}", check.pairwise_orthogonal);
    println!("sum to one: {}", check.sums_to_one);
    println!(
        "ideal dimensions: {} (total {} of {})",
        check.dimensions.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", "),
        check.total_dimension,
        check.algebra_dimension
    );
    if check.holds() {
        Ok(())
    } else {
        Err(semantic("decomposition check failed"))
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| semantic(format!("{}: {e}", path.display())))
}

fn print_idempotent(f: &Multivector, json: bool) -> Result<(), Failure> {
    if json {
        println!("{}", multivector_to_json(f));
    } else {
        let dim = left_ideal_basis(f).map_err(semantic)?.dimension;
        println!("{f}");
        println!("primitive: {}, ideal dim {dim}", is_primitive(f));
    }
    Ok(())
}

fn recover_source(args: &StructureArgs, model: impl FnOnce() -> IdempotentSpec) -> Result<Multivector, Failure> {
    match &args.input {
        Some(path) => multivector_from_json(&read_file(path)?).map_err(semantic),
        None => build_idempotent(&model()).map_err(semantic),
    }
}

fn cmd_structure(args: StructureArgs) -> Result<(), Failure> {
    match args.kind {
        StructureKind::Su3 => {
            if args.recover {
                let x = recover_source(&args, ideal::reference::su3_spec)?;
                let s = su3_recover(&x).map_err(semantic)?;
                print_su3(&s, args.json);
                return Ok(());
            }
            let s = match &args.input {
                Some(p) => su3_from_json(&read_file(p)?).map_err(semantic)?,
                None => model_su3(),
            };
            if args.to_idempotent {
                print_idempotent(&su3_idempotent(&s).map_err(semantic)?, args.json)
            } else {
                println!("psi+ ∧ psi- = {}", wedge(&s.psi_plus, &s.psi_minus).map_err(semantic)?);
                println!("volume constant: {}", s.volume_constant());
                println!("compatible: {}", s.is_compatible());
                let f = su3_idempotent(&s).map_err(semantic)?;
                println!("idempotent: true; primitive: {}", is_primitive(&f));
                Ok(())
            }
        }
        StructureKind::G2 => {
            if args.recover {
                let x = recover_source(&args, ideal::reference::g2_spec)?;
                let r = g2_recover(&x).map_err(semantic)?;
                print_g2(&r.structure, args.json);
                if !args.json {
                    println!("4-form: {}", r.four_form);
                    println!("4-form is the dual: {}", r.dual_consistent());
                }
                return Ok(());
            }
            let s = match &args.input {
                Some(p) => g2_from_json(&read_file(p)?).map_err(semantic)?,
                None => model_g2(),
            };
            let report = g2_metric(&s);
            if args.to_idempotent {
                print_idempotent(&g2_idempotent(&s).map_err(semantic)?, args.json)
            } else {
                let metric = if report.is_identity() { "identity".to_string() } else { format_matrix(&report.metric) };
                println!("metric: {metric}; orbit: {}", report.orbit);
                println!("determinant: {}", report.determinant);
                let f = g2_idempotent(&s).map_err(semantic)?;
                println!("idempotent: true; primitive: {}", is_primitive(&f));
                Ok(())
            }
        }
        StructureKind::Spin7 => {
            if args.recover {
                let x = recover_source(&args, ideal::reference::spin7_spec)?;
                let s = spin7_recover(&x).map_err(semantic)?;
                print_spin7(&s, args.json);
                return Ok(());
            }
            let s = match &args.input {
                Some(p) => spin7_from_json(&read_file(p)?).map_err(semantic)?,
                None => model_spin7(),
            };
            if args.to_idempotent {
                print_idempotent(&spin7_idempotent(&s).map_err(semantic)?, args.json)
            } else {
                println!("self-dual: {}", s.is_self_dual());
                println!("Omega ∧ Omega = {}*vol", s.volume_constant());
                let f = spin7_idempotent(&s).map_err(semantic)?;
                println!("idempotent: true; primitive: {}", is_primitive(&f));
                Ok(())
            }
        }
    }
}

fn format_matrix(m: &[Vec<cliffideal::Scalar>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn print_su3(s: &SU3Structure, json: bool) {
    if json {
        println!("{}", su3_to_json(s));
    } else {
        println!("omega: {}", s.omega);
        println!("psi+: {}", s.psi_plus);
        println!("psi-: {}", s.psi_minus);
    }
}

fn print_g2(s: &G2Structure, json: bool) {
    if json {
        println!("{}", g2_to_json(s));
    } else {
        println!("phi: {}", s.phi);
    }
}

fn print_spin7(s: &Spin7Structure, json: bool) {
    if json {
        println!("{}", spin7_to_json(s));
    } else {
        println!("Omega: {}", s.omega4);
    }
}

fn cmd_classify(p: usize, q: usize) -> Result<(), Failure> {
    let sig = Signature::new(p, q).map_err(semantic)?;
    let class = classify(sig);
    println!("{class}, minimal ideal dim {}", class.minimal_ideal_dim);
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let report: Report = run_selected(args.claim.as_deref()).map_err(parse_error)?;
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    let drift = report.drift(&golden_statuses());
    if drift.is_empty() {
        Ok(())
    } else {
        let lines: Vec<String> = drift.iter().map(|d| d.to_string()).collect();
        Err(semantic(format!("status drift against golden file:\n{}", lines.join("\n"))))
    }
}

fn cmd_lift(from: PathBuf, json: bool) -> Result<(), Failure> {
    let s = su3_from_json(&read_file(&from)?).map_err(semantic)?;
    let g2 = lift_su3_to_g2(&s).map_err(semantic)?;
    let f6 = su3_idempotent(&s).map_err(semantic)?;
    let f7 = lift_idempotent_6_to_7(&f6).map_err(semantic)?;
    if json {
        println!("{}", multivector_to_json(&f7));
        return Ok(());
    }
    let report = g2_metric(&g2);
    println!("phi: {}", g2.phi);
    println!("orbit: {}", report.orbit);
    println!("idempotent: {f7}");
    let dim = left_ideal_basis(&f7).map_err(semantic)?.dimension;
    println!("primitive: {}, ideal dim {dim}", is_primitive(&f7));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Idempotent(a) => cmd_idempotent(a),
        Command::Structure(a) => cmd_structure(a),
        Command::Classify { p, q } => cmd_classify(p, q),
        Command::VerifyPaper(a) => cmd_verify(a),
        Command::Lift { from, json } => cmd_lift(from, json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
