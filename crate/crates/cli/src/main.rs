mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hgt_core::dimensions::{dim_m, initial_data_total, dirac_kernel_dim_oracle, kernel_dim_oracle, DEFAULT_BUDGET};
use hgt_core::export::{family_to_json, family_to_latex, family_to_text};
use hgt_core::gt::appell::{appell_check, derivative_matrix, Variable};
use hgt_core::gt::monogenic::monogenic_basis_with;
use hgt_core::gt::roundtrip::ck_roundtrip_with;
use hgt_core::gt::{
    closed_form_family, lattice_check, scalar_matches, BasisFamily, GtBuilder, EdgeRoute, DEFAULT_BASIS_BUDGET,
};
use hgt_core::SpaceDescriptor;

use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "hgt", version, about = "Exact Gel'fand-Tsetlin bases of Hermitean monogenic polynomials")]
struct Cli {
    /// Cap on the monomial count of any space that is built or ranked.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Emit the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Space {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    r: usize,
}

impl Space {
    fn descriptor(&self) -> Result<SpaceDescriptor> {
        Ok(SpaceDescriptor::new(self.n, self.a, self.b, self.r)?)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of a space from the closed formula, optionally against a kernel-rank oracle.
    Dims {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        oracle: bool,
    },
    /// Construct a GT basis and write it out.
    Basis {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant checks on a constructed basis.
    Verify {
        #[command(flatten)]
        space: Space,
        /// Comma-separated subset of hmono,gram,count,lattice,ck,closedform.
        #[arg(long, default_value = "hmono,gram,count,lattice,ck,closedform")]
        checks: String,
    },
    /// Appell identities for closed forms and edge grades, plus derivative matrices.
    Appell {
        #[arg(long, default_value_t = 3)]
        amax: usize,
        #[arg(long, default_value_t = 3)]
        bmax: usize,
    },
    /// Orthogonal basis of spinor-valued monogenics of degree k.
    Monogenic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        verify: bool,
        /// Cross-check the count against the Dirac-kernel rank.
        #[arg(long)]
        oracle: bool,
    },
    /// Fischer Gram matrix of a constructed basis.
    Gram {
        #[command(flatten)]
        space: Space,
    },
}

const ALL_CHECKS: [&str; 6] = ["hmono", "gram", "count", "lattice", "ck", "closedform"];

struct Ctx {
    builder: GtBuilder,
    oracle_budget: usize,
}

fn echo(cmd: &Command) -> String {
    let space = |s: &Space| format!("--n {} --a {} --b {} --r {}", s.n, s.a, s.b, s.r);
    match cmd {
        Command::Dims { space: s, oracle } => format!("dims {}{}", space(s), if *oracle { " --oracle" } else { "" }),
        Command::Basis { space: s, format, .. } => format!("basis {} --format {format:?}", space(s)).to_lowercase(),
        Command::Verify { space: s, checks } => format!("verify {} --checks {checks}", space(s)),
        Command::Appell { amax, bmax } => format!("appell --amax {amax} --bmax {bmax}"),
        Command::Monogenic { n, k, verify, oracle } => format!(
            "monogenic --n {n} --k {k}{}{}",
            if *verify { " --verify" } else { "" },
            if *oracle { " --oracle" } else { "" }
        ),
        Command::Gram { space: s } => format!("gram {}", space(s)),
    }
}

fn cmd_dims(ctx: &mut Ctx, rep: &mut RunReport, space: &Space, oracle: bool) -> Result<()> {
    let d = space.descriptor()?;
    rep.descriptors.push(d.to_string());
    let formula = dim_m(&d);
    let mut result = formula.to_string();
    if oracle {
        let o = kernel_dim_oracle(&d, ctx.oracle_budget)?;
        result = format!("{formula} = {o}");
        rep.check("oracle", o == formula, format!("formula {formula}, kernel rank {o}"));
    }
    if d.n >= 2 && d.r > 0 && d.r < d.n {
        let total = initial_data_total(&d);
        rep.check("sum-identity", total == formula, format!("sum of initial-data dimensions {total}"));
    }
    rep.result = Some(result);
    Ok(())
}

fn render(family: &BasisFamily, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => family_to_json(family)? + "\n",
        Format::Latex => family_to_latex(family),
        Format::Text => family_to_text(family),
    })
}

/// Returns the rendered family when it goes to stdout.
fn cmd_basis(ctx: &mut Ctx, rep: &mut RunReport, space: &Space, format: Format, out: &Option<PathBuf>) -> Result<Option<String>> {
    let d = space.descriptor()?;
    rep.descriptors.push(d.to_string());
    let family = ctx.builder.basis(&d)?;
    let text = render(&family, format)?;
    match out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            rep.result = Some(format!("{} members written to {}", family.len(), path.display()));
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn closedform_check(ctx: &mut Ctx, rep: &mut RunReport, d: &SpaceDescriptor, family: &BasisFamily) -> Result<()> {
    let reference = if d.n == 2 && d.r == 1 {
        closed_form_family(d.a, d.b)?
    } else if d.n >= 2 && (d.r == 0 || d.r == d.n) {
        GtBuilder::new(ctx.builder_budget()).with_route(EdgeRoute::Extension).basis(d)?
    } else {
        rep.skip("closedform", "no closed form for this space");
        return Ok(());
    };
    match scalar_matches(family, &reference) {
        Some(m) => {
            let scalars: Vec<String> = m.iter().map(|(l, c)| format!("{l}:{c}")).collect();
            rep.check("closedform", true, format!("scalars {}", scalars.join(" ")));
        }
        None => rep.check("closedform", false, "some member is not a scalar multiple of its reference"),
    }
    Ok(())
}

impl Ctx {
    fn builder_budget(&self) -> usize {
        self.builder.budget()
    }
}

fn cmd_verify(ctx: &mut Ctx, rep: &mut RunReport, space: &Space, checks: &str) -> Result<()> {
    let wanted: Vec<&str> = checks.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    for w in &wanted {
        if !ALL_CHECKS.contains(w) {
            bail!("unknown check {w:?}; expected a subset of {}", ALL_CHECKS.join(","));
        }
    }
    let d = space.descriptor()?;
    rep.descriptors.push(d.to_string());
    let family = ctx.builder.basis(&d)?;
    let verdict = family.verify()?;
    rep.result = Some(format!("count {}", verdict.count));
    for name in ALL_CHECKS.iter().filter(|c| wanted.contains(c)) {
        match *name {
            "hmono" => rep.check(
                "hmono",
                verdict.monogenic_ok(),
                if verdict.monogenic_ok() {
                    "all members h-monogenic".to_string()
                } else {
                    format!("not h-monogenic: {}", verdict.non_monogenic.join(", "))
                },
            ),
            "gram" => {
                let detail = match &verdict.off_diagonal {
                    Some((i, j)) => format!("nonzero pairing between {i} and {j}"),
                    None if !verdict.diagonal_positive => "nonpositive diagonal entry".into(),
                    None => "diagonal, positive".into(),
                };
                rep.check("gram", verdict.gram_ok(), detail)
            }
            "count" => rep.check(
                "count",
                verdict.count_ok() && verdict.labels_ok(),
                format!(
                    "count {} (expected {}), {} inconsistent labels{}",
                    verdict.count,
                    verdict.expected_count,
                    verdict.bad_labels.len(),
                    if verdict.duplicate_labels { ", duplicates" } else { "" }
                ),
            ),
            "lattice" => {
                if d.r == 0 || d.r == d.n {
                    rep.skip("lattice", "edge grade has no two-slot decomposition");
                } else {
                    let l = lattice_check(d.n, d.a, d.b, d.r)?;
                    let mut detail = format!(
                        "{} component weights, {} interlacing, missing {}, extra {}, repeated {}",
                        l.component_weights.len(),
                        l.interlacing.len(),
                        l.missing.len(),
                        l.extra.len(),
                        l.repeated.len()
                    );
                    if !l.grid_count_matches() {
                        detail.push_str(&format!(", grid count {} differs", l.grid_count));
                    }
                    rep.check("lattice", l.passed(), detail)
                }
            }
            "ck" => {
                if d.n < 2 {
                    rep.skip("ck", "needs n >= 2");
                } else {
                    let r = ck_roundtrip_with(&mut ctx.builder, &d)?;
                    let detail = format!(
                        "{} data, image rank {}, {} restriction failures{}",
                        r.data_count,
                        r.image_rank,
                        r.failures.len(),
                        r.failures.first().map(|f| format!(": {f}")).unwrap_or_default()
                    );
                    rep.check("ck", r.passed(), detail)
                }
            }
            "closedform" => closedform_check(ctx, rep, &d, &family)?,
            _ => unreachable!(),
        }
    }
    Ok(())
}

fn cmd_appell(rep: &mut RunReport, amax: usize, bmax: usize) -> Result<()> {
    let r = appell_check(amax, bmax)?;
    rep.result = Some(format!("{} identities over {} elements", r.identities_checked, r.elements_checked));
    let detail = match r.failures.first() {
        Some(f) => format!("{} failures, first: {f}", r.failures.len()),
        None => "all identities hold".into(),
    };
    rep.check("identities", r.passed(), detail);

    let mut matrices = 0;
    let mut bad = Vec::new();
    for a in 0..=amax {
        for b in 0..=bmax {
            let src = closed_form_family(a, b)?;
            for v in [Variable::Z(1), Variable::Z(2), Variable::Zbar(1), Variable::Zbar(2)] {
                let tgt = match v.target(&src.descriptor) {
                    Some(t) => closed_form_family(t.a, t.b)?,
                    None => BasisFamily::empty(src.descriptor),
                };
                let m = derivative_matrix(v, &src, &tgt)?;
                matrices += 1;
                if !(m.in_span && m.is_appell_sparse()) {
                    bad.push(format!("d/d{v} on (a,b)=({a},{b})"));
                }
            }
        }
    }
    let detail = match bad.first() {
        Some(f) => format!("{} of {matrices} matrices fail, first: {f}", bad.len()),
        None => format!("{matrices} matrices, at most one entry in {{0, +1, -1}} per column"),
    };
    rep.check("derivative-matrices", bad.is_empty(), detail);
    Ok(())
}

fn cmd_monogenic(ctx: &mut Ctx, rep: &mut RunReport, n: usize, k: usize, verify: bool, oracle: bool) -> Result<()> {
    let basis = monogenic_basis_with(&mut ctx.builder, n, k)?;
    rep.result = Some(format!("{} elements", basis.members.len()));
    if verify {
        let v = basis.verify()?;
        rep.check("count", v.count as u64 == v.expected_count, format!("{} (expected {})", v.count, v.expected_count));
        rep.check("dirac", v.non_monogenic == 0, format!("{} members not annihilated", v.non_monogenic));
        rep.check(
            "gram",
            v.off_diagonal == 0 && v.diagonal_positive,
            format!("{} nonzero off-diagonal pairs", v.off_diagonal),
        );
        rep.check("hermitean-split", v.hermitean_mismatch == 0, format!("{} misclassified members", v.hermitean_mismatch));
    }
    if oracle {
        let o = dirac_kernel_dim_oracle(n, k, ctx.oracle_budget)?;
        rep.check("oracle", o == basis.members.len() as u64, format!("kernel rank {o}"));
    }
    Ok(())
}

fn cmd_gram(ctx: &mut Ctx, rep: &mut RunReport, space: &Space) -> Result<()> {
    let d = space.descriptor()?;
    rep.descriptors.push(d.to_string());
    let family = ctx.builder.basis(&d)?;
    let gram = family.gram()?;
    rep.result = Some(format!("{0}x{0}", gram.size()));
    rep.data = Some(serde_json::json!({ "labels": gram.labels, "entries": gram.to_json() }));
    rep.check("diagonal", gram.is_diagonal(), "off-diagonal entries are exactly zero");
    rep.check("positive", gram.diagonal_positive(), "diagonal entries are positive rationals");
    Ok(())
}

fn run(cli: &Cli) -> Result<(RunReport, Option<String>)> {
    let mut ctx = Ctx {
        builder: GtBuilder::new(cli.budget.unwrap_or(DEFAULT_BASIS_BUDGET)),
        oracle_budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
    };
    let mut rep = RunReport::new(echo(&cli.command));
    let start = Instant::now();
    let mut stdout_payload = None;
    match &cli.command {
        Command::Dims { space, oracle } => cmd_dims(&mut ctx, &mut rep, space, *oracle)?,
        Command::Basis { space, format, out } => stdout_payload = cmd_basis(&mut ctx, &mut rep, space, *format, out)?,
        Command::Verify { space, checks } => cmd_verify(&mut ctx, &mut rep, space, checks)?,
        Command::Appell { amax, bmax } => cmd_appell(&mut rep, *amax, *bmax)?,
        Command::Monogenic { n, k, verify, oracle } => cmd_monogenic(&mut ctx, &mut rep, *n, *k, *verify, *oracle)?,
        Command::Gram { space } => cmd_gram(&mut ctx, &mut rep, space)?,
    }
    if cli.timing {
        rep.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok((rep, stdout_payload))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((_, Some(payload))) => {
            print!("{payload}");
            ExitCode::SUCCESS
        }
        Ok((rep, None)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
            } else {
                print!("{}", rep.render_text());
            }
            if rep.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
