//! Command-line front end. Every command prints one JSON report; the exit
//! code is 0 when all checks pass, 1 on a failed check and 2 on bad input.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebras::{
    commutative_poly, fibre, jackson, jackson_iso_check, jackson_prime, kummer_witt, quantum_a3, quantum_plane,
    quantum_weyl, verify_downup,
};
use crate::centre::{sigma_check, centre_params, centre_presentation_check, resolve_omega, verify_centre};
use crate::check::Check;
use crate::cyclotomic::CycElem;
use crate::error::{Error, Result};
use crate::ext::{ext1, ext1_worked_table, ext1_oracle, ext1_sweep_one_dim};
use crate::homlie::{infinitesimal_homlie, kummer_witt_homlie, HomLieAlgebra};
use crate::modules::{central_character, simplicity, torsion_free_module, torsion_module, verify_rep, Representation, Simplicity};
use crate::ncalg::Presentation;
use crate::report::{full_regression, Report};

#[derive(Parser, Debug)]
#[command(name = "cycnc", version, about = "Exact algebra over cyclotomic fields")]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Order m of the field ℚ(ζ_m) used to read literals; defaults to --n.
    #[arg(long, global = true)]
    pub field_order: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a presentation and optionally verify it.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Diamond-lemma check of a family.
    Pbw(FamilyArgs),
    /// Bracket table and identity defects of a hom-Lie family.
    Homlie(HomlieArgs),
    /// Centre generators, σ automorphism and power identities.
    Centre(FamilyArgs),
    /// Resolve the exponent variant of the normal element Ω_a.
    Normal(NormalArgs),
    /// Classify the fibre over a character of the central powers.
    Fibre(FibreArgs),
    /// Torsion and torsion-free simple modules.
    Module {
        #[command(subcommand)]
        kind: ModuleKind,
    },
    /// Ext¹ between two representations, or the one-dimensional sweep.
    Ext(ExtArgs),
    /// Regression report over the reference values.
    Report(ReportArgs),
}

#[derive(Subcommand, Debug)]
pub enum AlgebraAction {
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        verify: Option<Verify>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Verify {
    Pbw,
    Iso,
    Downup,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Jackson,
    JacksonPrime,
    Kummerwitt,
    QuantumPlane,
    QuantumA3,
    QuantumWeyl,
    Commutative,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum, default_value = "jackson")]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub r: i64,
    #[arg(long, default_value = "0")]
    pub x: String,
    /// Deformation parameter of the quantum families.
    #[arg(long)]
    pub q: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum HomlieFamily {
    Infinitesimal,
    Kummerwitt,
}

#[derive(Args, Debug)]
pub struct HomlieArgs {
    #[arg(long, value_enum, default_value = "kummerwitt")]
    pub family: HomlieFamily,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub r: i64,
    #[arg(long, default_value = "1")]
    pub x: String,
    #[arg(long, default_value = "z")]
    pub q: String,
    #[arg(long, default_value = "1")]
    pub a: String,
}

#[derive(Args, Debug)]
pub struct NormalArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub r: i64,
    #[arg(long, default_value = "1")]
    pub x: String,
    #[arg(long)]
    pub a0: String,
    #[arg(long)]
    pub a1: String,
    #[arg(long)]
    pub a2: String,
}

#[derive(Args, Debug)]
pub struct FibreArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Comma-separated values of the generator powers.
    #[arg(long = "char")]
    pub character: String,
    /// Power fixed by the character; defaults to n for Jackson algebras
    /// and to the order of q² for the quantum Weyl algebra.
    #[arg(long)]
    pub exponent: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum ModuleKind {
    Torsion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long)]
        a: Option<String>,
    },
    Torsionfree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
pub struct ExtArgs {
    /// Representation JSON file for M.
    #[arg(long)]
    pub m: Option<PathBuf>,
    /// Representation JSON file for N.
    #[arg(long = "n")]
    pub n_rep: Option<PathBuf>,
    #[command(subcommand)]
    pub sweep: Option<ExtSweep>,
}

#[derive(Subcommand, Debug)]
pub enum ExtSweep {
    Sweep {
        /// Also replay the stated tables and the worked torsion-free example.
        #[arg(long)]
        paper_props: bool,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value = "1")]
        x: String,
    },
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Run every criterion.
    #[arg(long)]
    pub paper_regression: bool,
    /// Run a single criterion.
    #[arg(long)]
    pub criterion: Option<u8>,
}

struct Ctx {
    field_order: Option<u32>,
}

impl Ctx {
    fn order(&self, n: usize) -> u32 {
        self.field_order.unwrap_or(n.max(1) as u32)
    }

    fn lit(&self, s: &str, n: usize) -> Result<CycElem> {
        CycElem::parse(s, self.order(n))
    }

    fn lits(&self, s: &str, n: usize) -> Result<Vec<CycElem>> {
        s.split(',').map(|t| self.lit(t, n)).collect()
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serialisable")
}

fn presentation_value(p: &Presentation) -> Value {
    serde_json::from_str(&p.to_json()).expect("presentation json")
}

fn build_family(ctx: &Ctx, f: &FamilyArgs) -> Result<Presentation> {
    let x = ctx.lit(&f.x, f.n)?;
    let q = || -> Result<CycElem> {
        match &f.q {
            Some(q) => ctx.lit(q, f.n),
            None => Ok(CycElem::zeta(ctx.order(f.n), 1)),
        }
    };
    match f.family {
        Family::Jackson => jackson(f.n, f.r, &x),
        Family::JacksonPrime => jackson_prime(f.n, f.r, &x),
        Family::Kummerwitt => kummer_witt(f.n, f.r, &x),
        Family::QuantumPlane => quantum_plane(&q()?),
        Family::QuantumA3 => quantum_a3(&q()?),
        Family::QuantumWeyl => quantum_weyl(&q()?),
        Family::Commutative => commutative_poly(f.n, ctx.order(f.n)),
    }
}

fn family_params(r: Report, f: &FamilyArgs) -> Report {
    let r = r
        .param("family", f.family.to_possible_value().expect("no skipped variants").get_name())
        .param("n", f.n)
        .param("r", f.r)
        .param("x", &f.x);
    match &f.q {
        Some(q) => r.param("q", q),
        None => r,
    }
}

fn diamond_check(p: &Presentation) -> (Check, Value) {
    let d = p.diamond();
    let details = d
        .unresolved
        .iter()
        .map(|o| format!("{}: {}", crate::ncalg::Word::from_indices(&o.word).display(p.names()), o.difference))
        .collect::<Vec<_>>()
        .join("; ");
    (Check::new("diamond", d.is_confluent(), details), to_value(d))
}

fn cmd_algebra(ctx: &Ctx, f: &FamilyArgs, verify: Option<Verify>) -> Result<Report> {
    let p = build_family(ctx, f)?;
    let mut rep = family_params(Report::new("algebra build"), f);
    let mut result = json!({ "presentation": presentation_value(&p) });
    match verify {
        None => {}
        Some(Verify::Pbw) => {
            let (c, v) = diamond_check(&p);
            rep.checks.push(c);
            result["diamond"] = v;
        }
        Some(Verify::Iso) => {
            let x = ctx.lit(&f.x, f.n)?;
            let rels = jackson_iso_check(f.n, f.r, &x)?;
            for rc in &rels {
                rep.checks.push(Check::new(format!("image of {}", rc.relation), rc.holds, rc.image.clone()));
            }
            result["relations"] = to_value(&rels);
        }
        Some(Verify::Downup) => {
            let x = ctx.lit(&f.x, f.n)?;
            let du = verify_downup(f.n, f.r, &x)?;
            rep.checks.push(Check::new("down-up relations", du.holds(), du.parameter_note.clone()));
            result["downup"] = to_value(&du);
        }
    }
    rep.result = result;
    Ok(rep)
}

fn cmd_pbw(ctx: &Ctx, f: &FamilyArgs) -> Result<Report> {
    let p = build_family(ctx, f)?;
    let mut rep = family_params(Report::new("pbw"), f);
    let (c, v) = diamond_check(&p);
    rep.checks.push(c);
    rep.result = json!({ "diamond": v, "hilbert_series": p.hilbert_series(4) });
    Ok(rep)
}

fn bracket_table(h: &HomLieAlgebra) -> Value {
    let m = h.dim();
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let b = h.bracket(i, j);
            if b.iter().any(|c| !c.is_zero()) {
                rows.push(json!({ "i": i, "j": j, "value": to_value(&b.to_vec()) }));
            }
        }
    }
    Value::Array(rows)
}

fn cmd_homlie(ctx: &Ctx, a: &HomlieArgs) -> Result<Report> {
    let (h, mut rep) = match a.family {
        HomlieFamily::Kummerwitt => (
            kummer_witt_homlie(a.n, a.r, &ctx.lit(&a.x, a.n)?)?,
            Report::new("homlie").param("family", "kummerwitt").param("r", a.r).param("x", &a.x),
        ),
        HomlieFamily::Infinitesimal => (
            infinitesimal_homlie(a.n, &ctx.lit(&a.q, a.n)?, &ctx.lit(&a.a, a.n)?)?,
            Report::new("homlie").param("family", "infinitesimal").param("q", &a.q).param("a", &a.a),
        ),
    };
    rep = rep.param("n", a.n);
    let skew = h.skew_violations();
    let defects = h.check_hom_jacobi();
    rep.checks.push(Check::new("antisymmetry", skew.is_empty(), format!("{skew:?}")));
    rep.checks.push(Check::new("twisted cyclic identity", defects.is_empty(), format!("{} triples", defects.len())));
    let plain = h.with_identity_twist().check_hom_jacobi();
    rep.result = json!({
        "twist": to_value(&h.twist().to_vec()),
        "brackets": bracket_table(&h),
        "hom_jacobi_defects": to_value(&defects),
        "plain_jacobi_defects": to_value(&plain.iter().map(|d| {
            let half = CycElem::from_frac(1, 1, 2);
            crate::homlie::JacobiDefect { triple: d.triple, defect: d.defect.iter().map(|c| c * &half).collect() }
        }).collect::<Vec<_>>()),
    });
    Ok(rep)
}

fn cmd_centre(ctx: &Ctx, f: &FamilyArgs) -> Result<Report> {
    if f.family != Family::Jackson {
        return Err(Error::InvalidParameter("centre is implemented for the jackson family".into()));
    }
    let x = ctx.lit(&f.x, f.n)?;
    let mut rep = family_params(Report::new("centre"), f);
    let params = centre_params(f.n, f.r)?;
    let gens = verify_centre(f.n, f.r, &x)?;
    rep.checks.extend(gens.checks.iter().cloned());
    let mut result = json!({ "params": to_value(&params), "generator_checks": to_value(&gens) });
    if f.r > 0 {
        let bs = sigma_check(f.n, f.r, &x)?;
        rep.checks.extend(bs.checks.iter().cloned());
        result["sigma"] = to_value(&bs);
        if x.is_zero() {
            let pi = centre_presentation_check(f.n, f.r)?;
            rep.checks.extend(pi.checks.iter().cloned());
            result["presentation_identity"] = to_value(&pi);
        }
    }
    rep.result = result;
    Ok(rep)
}

fn cmd_normal(ctx: &Ctx, a: &NormalArgs) -> Result<Report> {
    let x = ctx.lit(&a.x, a.n)?;
    let coeffs = [ctx.lit(&a.a0, a.n)?, ctx.lit(&a.a1, a.n)?, ctx.lit(&a.a2, a.n)?];
    let res = resolve_omega(a.n, a.r, &x, &coeffs)?;
    let mut rep = Report::new("normal")
        .param("n", a.n)
        .param("r", a.r)
        .param("x", &a.x)
        .param("a", format!("{},{},{}", a.a0, a.a1, a.a2));
    rep.checks.push(Check::new(
        "some exponent variant is normal",
        res.resolved.is_some(),
        format!("tried {:?}", res.tried),
    ));
    rep.result = to_value(&res);
    Ok(rep)
}

fn cmd_fibre(ctx: &Ctx, a: &FibreArgs) -> Result<Report> {
    let f = &a.family;
    let p = build_family(ctx, f)?;
    let values = ctx.lits(&a.character, f.n)?;
    let exponent = match (a.exponent, f.family) {
        (Some(e), _) => e,
        (None, Family::QuantumWeyl) => {
            let q = match &f.q {
                Some(q) => ctx.lit(q, f.n)?,
                None => CycElem::zeta(ctx.order(f.n), 1),
            };
            let q2 = &q * &q;
            crate::cyclotomic::multiplicative_order(&q2, 1000)
                .ok_or_else(|| Error::InvalidParameter("q² is not a root of unity".into()))? as usize
        }
        (None, _) => f.n,
    };
    let alg = fibre(&p, exponent, &values)?;
    let class = alg.classify()?;
    let mut rep = family_params(Report::new("fibre"), f)
        .param("char", &a.character)
        .param("exponent", exponent);
    rep.checks.push(Check::new("associativity (sampled)", alg.associativity_failures(7).is_empty(), ""));
    rep.result = json!({ "labels": alg.labels(), "classification": to_value(&class) });
    Ok(rep)
}

fn module_report(mut rep: Report, m: &Representation) -> Result<Report> {
    let check = verify_rep(m)?;
    let simple = simplicity(m)?;
    rep.checks.push(Check::new("relations hold", check.holds, format!("{} failing relations", check.defects.len())));
    rep.checks.push(Check::new(
        "simple",
        matches!(simple, Simplicity::AbsolutelySimple | Simplicity::SimpleByEigenanalysis),
        format!("{simple:?}"),
    ));
    let ch = central_character(m).ok();
    rep.result = json!({
        "representation": to_value(m),
        "simplicity": to_value(&simple),
        "central_character": to_value(&ch),
    });
    Ok(rep)
}

fn cmd_module(ctx: &Ctx, k: &ModuleKind) -> Result<Report> {
    match k {
        ModuleKind::Torsion { n, d, r, x, a } => {
            let xv = ctx.lit(x, *n)?;
            let av = a.as_ref().map(|s| ctx.lit(s, *n)).transpose()?;
            let m = torsion_module(*n, *r, *d, &xv, av.as_ref())?;
            let mut rep = Report::new("module torsion").param("n", n).param("d", d).param("r", r).param("x", x);
            if let Some(a) = a {
                rep = rep.param("a", a);
            }
            module_report(rep, &m)
        }
        ModuleKind::Torsionfree { n, r, x, a, b, c } => {
            let m = torsion_free_module(*n, *r, &ctx.lit(x, *n)?, &ctx.lit(a, *n)?, &ctx.lit(b, *n)?, &ctx.lit(c, *n)?)?;
            let rep = Report::new("module torsionfree")
                .param("n", n)
                .param("r", r)
                .param("x", x)
                .param("a", a)
                .param("b", b)
                .param("c", c);
            module_report(rep, &m)
        }
    }
}

fn read_rep(path: &PathBuf) -> Result<Representation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    Representation::from_json(&text)
}

fn cmd_ext(ctx: &Ctx, a: &ExtArgs) -> Result<Report> {
    match (&a.sweep, &a.m, &a.n_rep) {
        (Some(ExtSweep::Sweep { paper_props, n, r, x }), _, _) => {
            let xv = ctx.lit(x, *n)?;
            let rows = ext1_sweep_one_dim(*n, *r, &xv)?;
            let mut rep = Report::new("ext sweep").param("n", n).param("r", r).param("x", x);
            let mut result = json!({ "rows": to_value(&rows) });
            if *paper_props {
                rep = rep.param("paper_props", true);
                for row in &rows {
                    rep.checks.push(Check::new(
                        format!("{} {:?} vs {:?}", row.case, row.first.iter().map(|c| c.to_string()).collect::<Vec<_>>(), row.second.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
                        row.matches(),
                        format!("dim {} (stated {}), inner {} (stated {})", row.dim, row.expected, row.inner_dim, row.expected_inner),
                    ));
                }
                let table = ext1_worked_table()?;
                rep.checks.push(Check::new(
                    "worked torsion-free table",
                    table == vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]],
                    format!("{table:?}"),
                ));
                result["worked_table"] = to_value(&table);
            }
            rep.result = result;
            Ok(rep)
        }
        (None, Some(m), Some(n)) => {
            let mr = read_rep(m)?;
            let nr = read_rep(n)?;
            let res = ext1(&mr, &nr)?;
            let mut rep = Report::new("ext").param("m", m.display()).param("n", n.display());
            rep.checks.push(Check::new("oracle", ext1_oracle(&mr, &nr, &res)?, ""));
            rep.result = to_value(&res);
            Ok(rep)
        }
        _ => Err(Error::InvalidParameter("ext needs --m and --n, or the sweep subcommand".into())),
    }
}

fn cmd_report(a: &ReportArgs) -> Result<Report> {
    let criteria = match a.criterion {
        Some(k) => vec![crate::report::criterion(k)?],
        None if a.paper_regression => full_regression()?,
        None => return Err(Error::InvalidParameter("report needs --paper-regression or --criterion".into())),
    };
    let mut rep = Report::new("report");
    if a.paper_regression {
        rep = rep.param("paper_regression", true);
    }
    for c in &criteria {
        for chk in &c.checks {
            rep.checks.push(Check { name: format!("{}. {}: {}", c.id, c.title, chk.name), ..chk.clone() });
        }
    }
    rep.result = json!({
        "criteria": criteria.iter().map(|c| json!({ "id": c.id, "title": c.title, "passed": c.passed() })).collect::<Vec<_>>()
    });
    Ok(rep)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let ctx = Ctx { field_order: cli.field_order };
    match &cli.command {
        Command::Algebra { action: AlgebraAction::Build { family, verify } } => cmd_algebra(&ctx, family, *verify),
        Command::Pbw(f) => cmd_pbw(&ctx, f),
        Command::Homlie(a) => cmd_homlie(&ctx, a),
        Command::Centre(f) => cmd_centre(&ctx, f),
        Command::Normal(a) => cmd_normal(&ctx, a),
        Command::Fibre(a) => cmd_fibre(&ctx, a),
        Command::Module { kind } => cmd_module(&ctx, kind),
        Command::Ext(a) => cmd_ext(&ctx, a),
        Command::Report(a) => cmd_report(a),
    }
}

/// Runs the CLI on `args` (including the program name); returns the exit code
/// and the text for stdout (or stderr when the code is 2).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli) {
        Ok(rep) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&rep)
            } else {
                serde_json::to_string(&rep)
            }
            .expect("serialisable");
            (if rep.passed() { 0 } else { 1 }, text)
        }
        Err(e) => (2, format!("error: {e}")),
    }
}
