mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use liedual_core::branching::{
    self, catalog::embedding, restrict_generic_with_budget, verify_rule, Rule, DEFAULT_BUDGET,
};
use liedual_core::charalg::group_dimension;
use liedual_core::minrep::{
    dualpair_graded, ktype_series, minrep_levels, sign_first_appearance, DualPairCase,
    GradedCharacter, MinrepCase, Stabilization,
};
use liedual_core::rational::{frac, int, parse_rat, to_i64, Rat};
use liedual_core::report::{Check, Report};
use liedual_core::theta::{
    compare_ps_vs_stabilized, lemma_infchar_consistency, parse_table, verify_fixture, TableKind,
};
use liedual_core::{FormalCharacter, GroupSpec, LieError, Weight};
use serde_json::json;

use output::{character_json, character_rows, Format, Output};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  a verification check failed (the report is still printed)
  2  invalid input
  3  negative multiplicity during a restriction
  4  dimension budget exceeded";

#[derive(Parser)]
#[command(name = "liedual", version, about = "Characters, branching rules and dual-pair K-type bookkeeping", after_help = EXIT_CODES)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Largest source dimension for generic restrictions.
    #[arg(long, env = "LIEDUAL_BUDGET", default_value_t = DEFAULT_BUDGET, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of an irreducible representation, e.g. `dim C4 1,1,1,1`.
    Dim { group: String, weight: String },
    /// Closed-form branching rule or catalog embedding.
    Branch {
        /// Rule id (sp4_to_sp2sp2, sp2_to_su2su2, so5_to_so3so2, spin10_halfspin,
        /// su6_omega3, su6_omega3_to_sp3) or catalog embedding name.
        rule: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Also run the generic restriction and compare.
        #[arg(long)]
        generic: bool,
        /// Charge block to keep (su6_omega3).
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<String>,
    },
    /// Verification sweeps.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest n for the infinitesimal-character sweep.
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        /// Largest rule parameter (rules) or largest x+y+z (quasisplit-mult).
        #[arg(long)]
        max_level: Option<u32>,
        /// Largest charge for quasisplit-mult.
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        /// Directory holding split.tsv and quasisplit.tsv.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Graded K-types, or the multiplicity series of one type.
    Minrep {
        case: String,
        #[arg(long, default_value_t = 12)]
        max_level: u32,
        /// K-type, e.g. `0,0,0,0` or `(2,0)x0`.
        #[arg(long = "type")]
        ktype: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Rules,
    Infchar,
    QuasisplitMult,
    Tables,
    All,
}

fn exit_code(e: &LieError) -> u8 {
    match e {
        LieError::NegativeMultiplicity { .. } => 3,
        LieError::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool is configured once");
    }
    let result = match &cli.command {
        Command::Dim { group, weight } => cmd_dim(group, weight),
        Command::Branch {
            rule,
            params,
            generic,
            charge,
        } => cmd_branch(rule, params, *generic, charge.as_deref(), cli.budget),
        Command::Verify {
            suite,
            max_n,
            max_level,
            max_m,
            fixtures,
        } => cmd_verify(
            *suite,
            *max_n,
            *max_level,
            *max_m,
            fixtures.as_ref(),
            cli.budget,
        ),
        Command::Minrep {
            case,
            max_level,
            ktype,
            charge,
        } => cmd_minrep(case, *max_level, ktype.as_deref(), charge.as_deref()),
    };
    match result {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if out.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn cmd_dim(group: &str, weight: &str) -> Result<Output, LieError> {
    let g = GroupSpec::from_str(group)?;
    let w = g.parse_weight(weight, vec![int(0); g.circle_count])?;
    let w = g.check_highest_weight(&w)?;
    let d = group_dimension(&g, &w)?;
    let mut out = Output::new(
        "dim",
        json!({"group": g.to_string(), "weight": w.to_string()}),
    );
    out.result = json!({ "dimension": d.to_string() });
    out.header = vec!["group".into(), "weight".into(), "dimension".into()];
    out.rows = vec![vec![g.to_string(), w.to_string(), d.to_string()]];
    out.lines = vec![d.to_string()];
    Ok(out)
}

fn param<'a>(params: &'a [String], i: usize, what: &str) -> Result<&'a str, LieError> {
    params
        .get(i)
        .map(String::as_str)
        .ok_or_else(|| LieError::InvalidInput(format!("missing parameter {what}")))
}

fn param_u32(params: &[String], i: usize, what: &str) -> Result<u32, LieError> {
    let v = to_i64(&parse_rat(param(params, i, what)?)?, what)?;
    u32::try_from(v).map_err(|_| LieError::InvalidInput(format!("{what} must be non-negative")))
}

fn expect_params(params: &[String], n: usize) -> Result<(), LieError> {
    if params.len() != n {
        return Err(LieError::InvalidInput(format!(
            "expected {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Closed-form result and the source weight of the matching catalog embedding.
fn closed_form(
    rule: Rule,
    params: &[String],
    charge: Option<Rat>,
) -> Result<(FormalCharacter, Weight), LieError> {
    let e = embedding(rule.embedding_name())?;
    let n_weight = |n: u32, pattern: &[i64]| {
        let v: Vec<i64> = pattern.iter().map(|p| p * n as i64).collect();
        e.big.normalize(&Weight::from_ints(&[&v], &[]))
    };
    if charge.is_some() && rule != Rule::Su6Omega3ToSp2Su2U1 {
        return Err(LieError::InvalidInput(format!(
            "--charge does not apply to {rule}"
        )));
    }
    Ok(match rule {
        Rule::Sp4ToSp2Sp2 => {
            expect_params(params, 1)?;
            let n = param_u32(params, 0, "n")?;
            (
                branching::branch_sp4_to_sp2sp2(n),
                n_weight(n, &[1, 1, 1, 1]),
            )
        }
        Rule::Sp2ToSu2Su2 => {
            expect_params(params, 2)?;
            let (x, y) = (param_u32(params, 0, "x")?, param_u32(params, 1, "y")?);
            let c = branching::branch_sp2_to_su2su2(x, y)?;
            (c, Weight::from_ints(&[&[x as i64, y as i64]], &[]))
        }
        Rule::So5ToSo3So2 => {
            expect_params(params, 2)?;
            let a = parse_rat(param(params, 0, "a")?)?;
            let b = parse_rat(param(params, 1, "b")?)?;
            (
                branching::branch_so5_to_so3so2(a, b)?,
                Weight::simple(vec![a, b]),
            )
        }
        Rule::Spin10HalfspinToSpin8U1 => {
            expect_params(params, 1)?;
            let n = param_u32(params, 0, "n")?;
            let w = Weight::simple(vec![frac(n as i64, 2); 5]);
            (branching::branch_spin10_halfspin_to_spin8u1(n), w)
        }
        Rule::Su6Omega3ToSp2Su2U1 => {
            expect_params(params, 1)?;
            let n = param_u32(params, 0, "n")?;
            let c = match charge {
                Some(m) => branching::branch_su6_omega3_to_sp2su2u1(n, to_i64(&m, "charge")?),
                None => branching::rules::branch_su6_omega3_all_charges(n),
            };
            (c, n_weight(n, &[1, 1, 1, 0, 0, 0]))
        }
        Rule::Su6Omega3ToSp3 => {
            expect_params(params, 1)?;
            let n = param_u32(params, 0, "n")?;
            (
                branching::branch_su6_omega3_to_sp3(n).character,
                n_weight(n, &[1, 1, 1, 0, 0, 0]),
            )
        }
    })
}

fn keep_charge(c: &FormalCharacter, charge: Option<Rat>) -> FormalCharacter {
    let Some(m) = charge else { return c.clone() };
    let mut out = FormalCharacter::new(c.group.clone());
    for (w, k) in &c.terms {
        if w.charges == [m] {
            out.add(w.clone(), *k);
        }
    }
    out
}

fn cmd_branch(
    rule: &str,
    params: &[String],
    generic: bool,
    charge: Option<&str>,
    budget: u64,
) -> Result<Output, LieError> {
    let charge = charge.map(parse_rat).transpose()?;
    let inputs = json!({"rule": rule, "params": params, "generic": generic,
                        "charge": charge.map(|m| m.to_string())});
    let mut out = Output::new("branch", inputs);
    out.header = vec![
        "source".into(),
        "weight".into(),
        "multiplicity".into(),
        "dimension".into(),
    ];

    if let Ok(r) = Rule::from_str(rule) {
        let (closed, source) = closed_form(r, params, charge)?;
        let mut result = json!({
            "rule": r.id(),
            "embedding": r.embedding_name(),
            "source": source.to_string(),
            "decomposition": character_json(&closed),
        });
        out.rows = character_rows(&closed, &["closed".to_string()]);
        out.lines
            .push(format!("{} {} -> {}", r.id(), source, closed.pretty()));
        if generic {
            let e = embedding(r.embedding_name())?;
            let g = restrict_generic_with_budget(e, &source, budget)?;
            let oracle = keep_charge(&g.decomposition, charge);
            let matched = oracle == closed;
            result["generic"] = character_json(&oracle);
            result["match"] = json!(matched);
            out.rows
                .extend(character_rows(&oracle, &["generic".to_string()]));
            out.lines.push(format!("generic -> {}", oracle.pretty()));
            out.lines
                .push(if matched { "MATCH" } else { "MISMATCH" }.to_string());
            out.checks.push(Check::compare(
                format!("{} {source}", r.id()),
                closed.pretty(),
                oracle.pretty(),
            ));
            out.checks.push(Check::compare(
                format!("{} {source} dimension", r.id()),
                g.source_dimension.to_string(),
                g.decomposition.total_dimension().to_string(),
            ));
        }
        out.result = result;
        return Ok(out);
    }

    let e = embedding(rule)?;
    if params.is_empty() {
        return Err(LieError::InvalidInput(format!(
            "{rule} needs a source weight"
        )));
    }
    let w = e.big.parse_weight(&params.join(","), vec![])?;
    let g = restrict_generic_with_budget(e, &w, budget)?;
    let decomposition = keep_charge(&g.decomposition, charge);
    out.result = json!({
        "rule": e.name,
        "embedding": e.name,
        "source": g.source.to_string(),
        "source_dimension": g.source_dimension.to_string(),
        "decomposition": character_json(&decomposition),
    });
    out.rows = character_rows(&decomposition, &["generic".to_string()]);
    out.lines.push(format!(
        "{} {} -> {}",
        e.name,
        g.source,
        decomposition.pretty()
    ));
    out.checks.push(Check::compare(
        format!("{} {} dimension", e.name, g.source),
        g.source_dimension.to_string(),
        g.decomposition.total_dimension().to_string(),
    ));
    Ok(out)
}

fn table_report(kind: TableKind, dir: Option<&PathBuf>) -> Result<Report, LieError> {
    let path = dir
        .cloned()
        .unwrap_or_else(|| PathBuf::from("fixtures"))
        .join(kind.file_name());
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if dir.is_some() => {
            return Err(LieError::InvalidInput(format!("{}: {e}", path.display())))
        }
        Err(_) => kind.embedded().to_string(),
    };
    verify_fixture(&parse_table(kind, &text)?)
}

fn cmd_verify(
    suite: Suite,
    max_n: u32,
    max_level: Option<u32>,
    max_m: u32,
    fixtures: Option<&PathBuf>,
    budget: u64,
) -> Result<Output, LieError> {
    let suite_name = suite
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let inputs =
        json!({"suite": suite_name, "max_n": max_n, "max_level": max_level, "max_m": max_m});
    let mut out = Output::new("verify", inputs);
    let mut reports = Vec::new();
    let run = |s: Suite| matches!(suite, Suite::All) || suite == s;
    if run(Suite::Rules) {
        for r in Rule::ALL {
            reports.push(verify_rule(
                r,
                max_level.unwrap_or(r.default_range()),
                budget,
            )?);
        }
    }
    if run(Suite::Infchar) {
        reports.push(lemma_infchar_consistency(max_n));
    }
    if run(Suite::QuasisplitMult) {
        reports.push(compare_ps_vs_stabilized(max_level.unwrap_or(12), max_m));
    }
    if run(Suite::Tables) {
        for kind in TableKind::ALL {
            reports.push(table_report(kind, fixtures)?);
        }
    }
    let mut sections = Vec::new();
    for r in &reports {
        out.lines.push(format!("{}: {}", r.title, r.summary()));
        sections.push(json!({"title": r.title, "summary": r.summary()}));
        out.checks.extend(r.checks.iter().cloned());
    }
    out.result = json!({ "sections": sections, "summary": out.summary() });
    Ok(out)
}

fn graded_output(out: &mut Output, case: &str, g: &GradedCharacter) {
    out.header = vec![
        "level".into(),
        "weight".into(),
        "multiplicity".into(),
        "dimension".into(),
        "charge".into(),
        "sign".into(),
    ];
    let mut levels = Vec::new();
    for (n, l) in g.levels.iter().enumerate() {
        let charge = |w: &Weight| g.charge_grading.as_ref().map(|c| c[n][w].to_string());
        let sign = |w: &Weight| g.sign_grading.as_ref().map(|s| s[n][w]);
        let mut terms = Vec::new();
        for (w, m) in &l.terms {
            let d = group_dimension(&g.group, w).expect("valid");
            terms.push(json!({
                "weight": w.to_string(),
                "multiplicity": m,
                "dimension": d.to_string(),
                "charge": charge(w),
                "sign": sign(w),
            }));
            out.rows.push(vec![
                n.to_string(),
                w.to_string(),
                m.to_string(),
                d.to_string(),
                charge(w).unwrap_or_default(),
                sign(w).map(|s| s.to_string()).unwrap_or_default(),
            ]);
        }
        out.lines.push(format!("level {n}: {}", l.pretty()));
        levels.push(json!({"level": n, "terms": terms}));
    }
    out.result = json!({"case": case, "group": g.group.to_string(), "levels": levels});
}

fn cmd_minrep(
    case: &str,
    max_level: u32,
    ktype: Option<&str>,
    charge: Option<&str>,
) -> Result<Output, LieError> {
    let m = charge.map(parse_rat).transpose()?;
    let inputs = json!({"case": case, "max_level": max_level, "type": ktype,
                        "charge": m.map(|m| m.to_string())});
    let mut out = Output::new("minrep", inputs);

    if let Ok(c) = MinrepCase::from_str(case) {
        if ktype.is_some() || m.is_some() {
            return Err(LieError::InvalidInput(format!(
                "--type and --charge apply to dual-pair cases, not {c}"
            )));
        }
        graded_output(&mut out, c.id(), &minrep_levels(c, max_level));
        return Ok(out);
    }
    let c = DualPairCase::from_str(case)?;
    let Some(ktype) = ktype else {
        if m.is_some() {
            return Err(LieError::InvalidInput("--charge needs --type".into()));
        }
        graded_output(&mut out, c.id(), &dualpair_graded(c, max_level)?);
        return Ok(out);
    };

    let ty = c.type_group().parse_weight(ktype, vec![])?;
    let mode = match c {
        DualPairCase::SplitJSplitE => Stabilization::Increment,
        _ => Stabilization::Value,
    };
    let series = ktype_series(c, &ty, m, max_level, mode)?;
    let growth = series.growth(mode);
    let sign = if m.is_none() || m == Some(int(0)) {
        match sign_first_appearance(c, &ty) {
            Ok(a) => Some(a),
            Err(LieError::NotCovered(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    out.header = vec!["level".into(), "multiplicity".into()];
    out.rows = series
        .values
        .iter()
        .enumerate()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    out.lines.push(format!(
        "{} in {}: {}",
        series.target,
        c,
        series
            .values
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    ));
    out.lines.push(format!(
        "first_level {}, stabilized {}",
        series
            .first_level
            .map_or("none".to_string(), |l| l.to_string()),
        series.stabilized_value
    ));
    if let Some(a) = &sign {
        out.lines.push(format!(
            "tag {} (sign {} at level {})",
            a.tag, a.sign, a.level
        ));
    }
    out.result = json!({
        "case": c.id(),
        "type": series.target,
        "values": series.values,
        "first_level": series.first_level,
        "stabilized_value": series.stabilized_value,
        "growth": {
            "accepted": growth.accepted,
            "bound": growth.bound,
            "onset": growth.onset,
        },
        "tag": sign.map(|a| a.tag.to_string()),
        "tag_level": sign.map(|a| a.level),
    });
    Ok(out)
}
