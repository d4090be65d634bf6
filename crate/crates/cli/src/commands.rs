//! Subcommand implementations. Each returns whether its check passed;
//! errors are usage or input problems.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::json;

use fjl_core::degrees::{degree_interval, DegreeReport, SearchBudget};
use fjl_core::harness::{run_all, run_suite, SuiteOptions, SuiteReport};
use fjl_core::kernel::golden::golden_proofs;
use fjl_core::kernel::{check_cs, check_derivation, parse_derivation, ConstantSpecification, Derivation};
use fjl_core::lifting::lift;
use fjl_core::models::{find_countermodel, validate_model, Budget, FittingModel};
use fjl_core::syntax::parse_formula;
use fjl_core::{Formula, LogicConfig};

use crate::{Cli, Command, LogicArgs, SuiteName};

pub fn run(cli: &Cli) -> Result<bool> {
    let json = cli.json;
    match &cli.command {
        Command::Parse { formula, logic } => parse(formula, logic, json),
        Command::Eval { model, world, formula } => eval(model, world.as_deref(), formula, json),
        Command::ValidateModel { model, logic, formulas } => validate(model, logic, formulas, json),
        Command::CheckProof { proof, logic } => check_proof(proof, logic, json),
        Command::CheckCs { file, logic } => check_cs_file(file, logic, json),
        Command::Internalize { proof, logic, out } => internalize(proof, logic, out.as_deref(), json),
        Command::Degree { formula, theory, logic, depth, restarts, witness_dir } => {
            let budget = SearchBudget { restarts: *restarts, seed: cli.seed, ..SearchBudget::default() };
            degree(formula, theory, logic, *depth, &budget, witness_dir.as_deref(), json)
        }
        Command::Countermodel { formula, logic, trials, max_worlds, max_denominator, out } => {
            let budget =
                Budget { max_worlds: *max_worlds, max_denominator: *max_denominator, trials: *trials, seed: cli.seed };
            countermodel(formula, logic, &budget, out.as_deref(), json)
        }
        Command::Suite { name, logic, seeds } => {
            let options = SuiteOptions { logic: *logic, seed: cli.seed, seeds: *seeds };
            suite(*name, &options, json)
        }
        Command::Golden { dir, check } => golden(dir, *check),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn formula(text: &str, config: &LogicConfig) -> Result<Formula> {
    parse_formula(text, config).with_context(|| format!("parsing `{text}`"))
}

fn load_model(path: &Path) -> Result<FittingModel> {
    FittingModel::from_json(&read(path)?).with_context(|| format!("loading {}", path.display()))
}

fn constant_specification(args: &LogicArgs) -> Result<ConstantSpecification> {
    Ok(match args.cs.as_str() {
        "total" => ConstantSpecification::total(),
        "empty" => ConstantSpecification::empty(),
        path => ConstantSpecification::parse_finite(&read(Path::new(path))?, &args.logic)
            .with_context(|| format!("parsing constant specification {path}"))?,
    })
}

fn load_derivation(path: &Path, config: &LogicConfig) -> Result<Derivation> {
    parse_derivation(&read(path)?, config).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn parse(text: &str, config: &LogicConfig, json: bool) -> Result<bool> {
    let f = match parse_formula(text, config) {
        Ok(f) => f,
        Err(e) => {
            if json {
                print_json(&json!({ "input": text, "error": e.to_string() }));
            } else {
                println!("rejected: {e}");
            }
            return Ok(false);
        }
    };
    let expanded = f.expand();
    if json {
        print_json(&json!({
            "input": text,
            "formula": f.to_string(),
            "expanded": expanded.to_string(),
            "size": expanded.size(),
            "depth": expanded.depth(),
        }));
    } else {
        println!("{f}");
        if expanded != f {
            println!("expands to: {expanded}");
        }
    }
    Ok(true)
}

fn eval(model: &Path, world: Option<&str>, text: &str, json: bool) -> Result<bool> {
    let m = load_model(model)?;
    let f = formula(text, &LogicConfig::permissive())?;
    let values = m.eval_all(&f);
    let rows: Vec<(String, String)> = match world {
        Some(w) => {
            let i = m.world_index(w)?;
            vec![(w.to_string(), values[i].to_string())]
        }
        None => m.world_names().zip(&values).map(|(w, v)| (w.to_string(), v.to_string())).collect(),
    };
    if json {
        let values: serde_json::Map<_, _> = rows.iter().map(|(w, v)| (w.clone(), json!(v))).collect();
        print_json(&json!({ "formula": f.to_string(), "values": values }));
    } else if world.is_some() {
        println!("{}", rows[0].1);
    } else {
        for (w, v) in rows {
            println!("{w}: {v}");
        }
    }
    Ok(true)
}

fn validate(model: &Path, args: &LogicArgs, formulas: &[String], json: bool) -> Result<bool> {
    let m = load_model(model)?;
    let cs = constant_specification(args)?;
    let relevant = formulas.iter().map(|t| formula(t, &args.logic)).collect::<Result<Vec<_>>>()?;
    let report = validate_model(&m, &args.logic, &cs, &relevant);
    let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    if json {
        print_json(&json!({
            "logic": args.logic.name(),
            "passed": report.passed(),
            "pairs": report.pairs,
            "constraints": report.constraints,
            "violations": violations,
        }));
    } else {
        let verdict = if report.passed() { "admissible" } else { "not admissible" };
        println!("{verdict} for {}: {} pairs, {} constraints checked", args.logic, report.pairs, report.constraints);
        for v in &violations {
            println!("  {v}");
        }
    }
    Ok(report.passed())
}

fn check_proof(path: &Path, args: &LogicArgs, json: bool) -> Result<bool> {
    let d = load_derivation(path, &args.logic)?;
    let cs = constant_specification(args)?;
    let result = check_derivation(&d, &args.logic, &cs);
    match (&result, json) {
        (Ok(r), true) => {
            print_json(&json!({ "accepted": true, "steps": r.steps, "conclusion": r.conclusion.to_string() }))
        }
        (Ok(r), false) => println!("accepted: {} steps, conclusion {}", r.steps, r.conclusion),
        (Err(e), true) => print_json(&json!({ "accepted": false, "step": e.step + 1, "error": e.error.to_string() })),
        (Err(e), false) => println!("rejected: {e}"),
    }
    Ok(result.is_ok())
}

fn check_cs_file(path: &Path, config: &LogicConfig, json: bool) -> Result<bool> {
    let cs = ConstantSpecification::parse_finite(&read(path)?, config)
        .with_context(|| format!("parsing {}", path.display()))?;
    let report = check_cs(&cs, config);
    let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    if json {
        print_json(&json!({ "entries": report.entries, "passed": report.passed(), "violations": violations }));
    } else {
        let verdict = if report.passed() { "well formed" } else { "ill formed" };
        println!("{verdict}: {} entries", report.entries);
        for v in &violations {
            println!("  {v}");
        }
    }
    Ok(report.passed())
}

fn internalize(path: &Path, args: &LogicArgs, out: Option<&Path>, json: bool) -> Result<bool> {
    let d = load_derivation(path, &args.logic)?;
    let cs = constant_specification(args)?;
    let lifted = match lift(&d, &args.logic, &cs) {
        Ok(l) => l,
        Err(e) => {
            if json {
                print_json(&json!({ "lifted": false, "error": e.to_string() }));
            } else {
                println!("not lifted: {e}");
            }
            return Ok(false);
        }
    };
    let text = lifted.derivation.to_string();
    if let Some(out) = out {
        fs::write(out, &text).with_context(|| format!("writing {}", out.display()))?;
    }
    if json {
        let hypotheses: Vec<String> = lifted.hypothesis_terms.iter().map(ToString::to_string).collect();
        print_json(&json!({
            "lifted": true,
            "term": lifted.term.to_string(),
            "statement": lifted.statement.to_string(),
            "hypothesis_terms": hypotheses,
            "steps": lifted.derivation.len(),
        }));
    } else {
        println!("// term: {}", lifted.term);
        println!("// statement: {}", lifted.statement);
        print!("{text}");
    }
    Ok(true)
}

fn degree(
    text: &str,
    theory: &[String],
    args: &LogicArgs,
    depth: usize,
    budget: &SearchBudget,
    witness_dir: Option<&Path>,
    json: bool,
) -> Result<bool> {
    let a = formula(text, &args.logic)?;
    let theory = theory.iter().map(|t| formula(t, &args.logic)).collect::<Result<Vec<_>>>()?;
    let cs = constant_specification(args)?;
    let interval = match degree_interval(&theory, &a, &args.logic, &cs, depth, budget) {
        Ok(i) => i,
        Err(e) => {
            println!("no certified interval: {e}");
            return Ok(false);
        }
    };
    let mut report = DegreeReport {
        formula: a.to_string(),
        lower: interval.lower.clone(),
        upper: interval.upper.clone(),
        lower_witness_file: None,
        upper_witness_file: None,
    };
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let proof = dir.join("lower.proof");
        fs::write(&proof, interval.lower_witness.to_string())?;
        report.lower_witness_file = Some(proof.display().to_string());
        if let Some((m, _)) = &interval.upper_witness {
            let model = dir.join("upper.json");
            fs::write(&model, m.to_json())?;
            report.upper_witness_file = Some(model.display().to_string());
        }
    }
    if json {
        print_json(&report);
    } else {
        println!("[{}, {}]", report.lower, report.upper);
        if let Some((_, w)) = &interval.upper_witness {
            println!("upper bound attained at world {w}");
        }
    }
    Ok(true)
}

fn countermodel(text: &str, args: &LogicArgs, budget: &Budget, out: Option<&Path>, json: bool) -> Result<bool> {
    let f = formula(text, &args.logic)?;
    let cs = constant_specification(args)?;
    let Some(found) = find_countermodel(&f, &args.logic, &cs, budget) else {
        if json {
            print_json(&json!({ "found": false, "trials": budget.trials }));
        } else {
            println!("no countermodel in {} trials", budget.trials);
        }
        return Ok(false);
    };
    let model_json = found.model.to_json();
    if let Some(out) = out {
        fs::write(out, &model_json).with_context(|| format!("writing {}", out.display()))?;
    }
    if json {
        let model: serde_json::Value = serde_json::from_str(&model_json).expect("model files are JSON");
        print_json(&json!({
            "found": true,
            "trial": found.trial,
            "world": found.world,
            "value": found.value.to_string(),
            "model": model,
        }));
    } else {
        println!("{f} has value {} at {} (trial {})", found.value, found.world, found.trial);
        println!("{model_json}");
    }
    Ok(true)
}

fn suite(name: SuiteName, options: &SuiteOptions, json: bool) -> Result<bool> {
    let reports: Vec<SuiteReport> = match name {
        SuiteName::All => run_all(options),
        SuiteName::One(s) => vec![run_suite(s, options)],
    };
    if json {
        print_json(&reports);
    } else {
        for r in &reports {
            print!("{r}");
        }
    }
    Ok(reports.iter().all(SuiteReport::passed))
}

fn golden(dir: &Path, check: bool) -> Result<bool> {
    let proofs = golden_proofs();
    if !check {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for g in &proofs {
            fs::write(dir.join(&g.file), &g.text)?;
        }
        println!("wrote {} proofs to {}", proofs.len(), dir.display());
        return Ok(true);
    }
    if !dir.is_dir() {
        bail!("{} is not a directory", dir.display());
    }
    let mut ok = true;
    for g in &proofs {
        let path = dir.join(&g.file);
        let same = fs::read_to_string(&path).is_ok_and(|text| text == g.text);
        if !same {
            println!("differs: {}", path.display());
            ok = false;
        }
    }
    if ok {
        println!("{} proofs match", proofs.len());
    }
    Ok(ok)
}
