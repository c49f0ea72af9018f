//! The `akb` command line.
//!
//! [`run`] does all the work and returns the exit code with the captured
//! output, so the binary stays a thin wrapper and tests can drive it
//! in-process.

use std::fmt::Write as _;
use std::panic::{self, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::abacus::{charged_core, sort_for_core, uglov_abacus, uglov_tau, Abacus};
use crate::blocks::{classify_blocks, components, fayers_b, BlockSummary, ComponentRecord};
use crate::error::{Error, Result};
use crate::lattice::{block_invariants, Context, Multicharge, ResidueConvention, RootVector, WeightVector};
use crate::verify::{verify_with_env_threads, Grid, VerifyReport};
use crate::young::{hub, omega_weight, residue_vector, ChargedMultipartition, Multipartition, Partition};

/// Member lists longer than this are cut short in table output.
pub const TABLE_MEMBER_LIMIT: usize = 20;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "akb", version, about = "Blocks of Ariki-Koike algebras and fixed-point components of Gieseker spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Residue data of one charged multipartition.
    Res(QueryArgs),
    /// Charged ell-core of one charged multipartition.
    Core(QueryArgs),
    /// Uglov's map applied to one charged multipartition.
    Uglov(LiftedArgs),
    /// All blocks of size n.
    Blocks(SweepArgs),
    /// Components of the fixed-point locus for size n.
    Components(SweepArgs),
    /// Abacus of one charged multipartition.
    Abacus(AbacusArgs),
    /// Runs the property suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    ell: usize,
    /// Level; inferred from --charge or --mp when absent.
    #[arg(long)]
    r: Option<usize>,
    /// Comma-separated integers, reduced mod ell. Defaults to all zeros.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    charge: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[command(flatten)]
    common: Common,
    /// Multipartition as JSON, e.g. "[[2,1],[]]".
    #[arg(long)]
    mp: String,
}

#[derive(Args, Debug)]
struct LiftedArgs {
    #[command(flatten)]
    query: QueryArgs,
    /// Integer lifts of the charge, one per component.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lift: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct AbacusArgs {
    #[command(flatten)]
    lifted: LiftedArgs,
    /// Position range "lo,hi" to render.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    window: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest n of the grid.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Largest n of the level-one block count.
    #[arg(long, default_value_t = 10)]
    level_one_n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Debugging aid: use transposed node residues.
    #[arg(long, hide = true)]
    transposed_residues: bool,
}

/// `akb res` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResOutput {
    pub d: RootVector,
    pub omega: i64,
    #[serde(with = "crate::blocks::lam_only")]
    pub hub: WeightVector,
    pub dim: i64,
    pub k: i64,
}

/// `akb core` output; `omega` is the number of elementary operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreOutput {
    pub core: Multipartition,
    pub charge: Multicharge,
    pub lifts: Vec<i64>,
    pub omega: usize,
}

/// `akb uglov` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UglovOutput {
    pub partition: Partition,
    pub charge: i64,
}

/// `akb abacus` output; `b[j][i]` is the largest bead of row `j + 1`
/// congruent to `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusOutput {
    pub abacus: Abacus,
    pub b: Vec<Vec<i64>>,
    pub render: String,
}

/// `akb verify --format json` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub properties: Vec<PropertyOutput>,
    pub all_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutput {
    pub name: String,
    pub instances: usize,
    pub counterexample: Option<String>,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IterationCap(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli.command))) {
        Ok(Ok((code, stdout))) => Outcome { code, stdout, stderr: String::new() },
        Ok(Err(Failure::Usage(msg))) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n\nFor more information, try 'akb --help'.\n"),
        },
        Ok(Err(Failure::Internal(msg))) => internal(msg),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            internal(msg)
        }
    }
}

fn internal(msg: String) -> Outcome {
    Outcome {
        code: EXIT_INTERNAL,
        stdout: String::new(),
        stderr: format!("internal invariant violated: {msg}\n"),
    }
}

type Dispatch = std::result::Result<(i32, String), Failure>;

fn dispatch(command: Command) -> Dispatch {
    match command {
        Command::Res(a) => res(&a),
        Command::Core(a) => core(&a),
        Command::Uglov(a) => uglov(&a),
        Command::Blocks(a) => blocks(&a),
        Command::Components(a) => components_cmd(&a),
        Command::Abacus(a) => abacus(&a),
        Command::Verify(a) => Ok(verify_cmd(&a)),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

/// Resolves `r`, the context and the multicharge. `mp_r` is the component
/// count of `--mp` when present.
fn setup(c: &Common, mp_r: Option<usize>) -> Result<(Context, Multicharge)> {
    let r = c
        .r
        .or(c.charge.as_ref().map(Vec::len))
        .or(mp_r)
        .unwrap_or(1);
    let ctx = Context::new(c.ell, r)?;
    let charge = match &c.charge {
        Some(v) => Multicharge::new(&ctx, v)?,
        None => Multicharge::zero(&ctx),
    };
    if let Some(got) = mp_r {
        if got != r {
            return Err(Error::ComponentCount { expected: r, got });
        }
    }
    Ok((ctx, charge))
}

fn query(a: &QueryArgs) -> Result<(Context, ChargedMultipartition)> {
    let mp = Multipartition::parse(&a.mp)?;
    let (ctx, s) = setup(&a.common, Some(mp.r()))?;
    Ok((ctx, ChargedMultipartition::new(mp, s)?))
}

fn lifts_for(lift: &Option<Vec<i64>>, ctx: &Context, x: &ChargedMultipartition) -> Result<Vec<i64>> {
    match lift {
        None => Ok(x.charge().lifts()),
        Some(l) => {
            if l.len() != ctx.r() {
                return Err(Error::DimensionMismatch { expected: ctx.r(), got: l.len() });
            }
            if l.iter().zip(x.charge().residues()).any(|(&t, &s)| ctx.reduce(t) != s) {
                return Err(Error::InvalidLifts(l.clone()));
            }
            Ok(l.clone())
        }
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn pairs(items: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = items.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
    table(&rows)
}

fn res(a: &QueryArgs) -> Dispatch {
    let (ctx, x) = query(a)?;
    let d = residue_vector(&ctx, &x);
    let inv = block_invariants(&ctx, &d, x.charge())
        .ok_or_else(|| Failure::Internal(format!("residue vector {d} is not a weight")))?;
    let omega = omega_weight(&ctx, &x);
    let out = ResOutput { dim: 2 * omega, d, omega, hub: hub(&ctx, &x), k: inv.k };
    Ok((EXIT_OK, match a.common.format {
        Format::Json => json(&out),
        Format::Table => pairs(&[
            ("d", out.d.to_string()),
            ("omega", out.omega.to_string()),
            ("hub", out.hub.to_string()),
            ("dim", out.dim.to_string()),
            ("k", out.k.to_string()),
        ]),
    }))
}

fn core(a: &QueryArgs) -> Dispatch {
    let (ctx, x) = query(a)?;
    let c = charged_core(&ctx, &x);
    let out = CoreOutput { core: c.mp, charge: c.charge, lifts: c.lifts, omega: c.ops };
    Ok((EXIT_OK, match a.common.format {
        Format::Json => json(&out),
        Format::Table => pairs(&[
            ("core", out.core.to_string()),
            ("charge", out.charge.to_string()),
            ("lifts", join(&out.lifts)),
            ("omega", out.omega.to_string()),
        ]),
    }))
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn uglov(a: &LiftedArgs) -> Dispatch {
    let (ctx, x) = query(&a.query)?;
    let (partition, charge) = match &a.lift {
        None => {
            let sorted = sort_for_core(&x);
            uglov_tau(&ctx, &sorted.mp, &sorted.lifts)?
        }
        Some(_) => {
            let lifts = lifts_for(&a.lift, &ctx, &x)?;
            uglov_abacus(&Abacus::from_multipartition(ctx.ell(), x.mp(), &lifts)?)
        }
    };
    let out = UglovOutput { partition, charge };
    Ok((EXIT_OK, match a.query.common.format {
        Format::Json => json(&out),
        Format::Table => pairs(&[("partition", out.partition.to_string()), ("charge", out.charge.to_string())]),
    }))
}

fn members_cell(members: &[Multipartition]) -> String {
    let shown: Vec<String> = members.iter().take(TABLE_MEMBER_LIMIT).map(|m| m.to_string()).collect();
    let mut cell = shown.join(" ");
    if members.len() > TABLE_MEMBER_LIMIT {
        let _ = write!(cell, " ... (+{} more)", members.len() - TABLE_MEMBER_LIMIT);
    }
    cell
}

fn blocks(a: &SweepArgs) -> Dispatch {
    let (ctx, s) = setup(&a.common, None)?;
    let list: Vec<BlockSummary> = classify_blocks(&ctx, a.n, &s);
    Ok((EXIT_OK, match a.common.format {
        Format::Json => json(&list),
        Format::Table => {
            let mut rows = vec![["d", "n", "hub", "omega", "dim", "k", "core", "core_block", "members"]
                .map(String::from)
                .to_vec()];
            for b in &list {
                rows.push(vec![
                    b.key.to_string(),
                    b.n.to_string(),
                    b.hub.to_string(),
                    b.omega.to_string(),
                    b.dim.to_string(),
                    b.k.to_string(),
                    format!("{} s={}", b.core.mp, b.core.charge),
                    b.is_core_block.to_string(),
                    members_cell(&b.members),
                ]);
            }
            table(&rows)
        }
    }))
}

fn components_cmd(a: &SweepArgs) -> Dispatch {
    let (ctx, s) = setup(&a.common, None)?;
    let list: Vec<ComponentRecord> = components(&ctx, a.n, &s);
    Ok((EXIT_OK, match a.common.format {
        Format::Json => json(&list),
        Format::Table => {
            let mut rows = vec![vec!["d".to_string(), "dim".to_string()]];
            rows.extend(list.iter().map(|c| vec![c.d.to_string(), c.dim.to_string()]));
            table(&rows)
        }
    }))
}

fn abacus(a: &AbacusArgs) -> Dispatch {
    let (ctx, x) = query(&a.lifted.query)?;
    let lifts = lifts_for(&a.lifted.lift, &ctx, &x)?;
    let ab = Abacus::from_multipartition(ctx.ell(), x.mp(), &lifts)?;
    let (lo, hi) = match &a.window {
        None => ab.default_window(),
        Some(w) if w.len() == 2 && w[0] <= w[1] => (w[0], w[1]),
        Some(w) => return Err(Failure::Usage(format!("--window expects lo,hi with lo <= hi, got {w:?}"))),
    };
    let b = (1..=ctx.r())
        .map(|j| (0..ctx.ell()).map(|i| fayers_b(&ctx, x.mp(), &lifts, i, j)).collect())
        .collect();
    let out = AbacusOutput { render: ab.render(lo, hi), abacus: ab, b };
    Ok((EXIT_OK, match a.lifted.query.common.format {
        Format::Json => json(&out),
        Format::Table => {
            let mut s = out.render.clone();
            s.push('\n');
            for (j, row) in out.b.iter().enumerate() {
                let _ = writeln!(s, "b[{}] = {}", j + 1, join(row));
            }
            s
        }
    }))
}

fn verify_cmd(a: &VerifyArgs) -> (i32, String) {
    let mut grid = Grid::standard(a.seed);
    grid.n_max = a.n_max;
    grid.level_one_n_max = a.level_one_n_max;
    if a.transposed_residues {
        grid.convention = ResidueConvention::Transposed;
    }
    let report: VerifyReport = verify_with_env_threads(&grid);
    let code = if report.all_hold() { EXIT_OK } else { EXIT_FAILED };
    let text = match a.format {
        Format::Table => report.to_string(),
        Format::Json => json(&VerifyOutput {
            all_hold: report.all_hold(),
            properties: report
                .properties
                .into_iter()
                .map(|p| PropertyOutput { name: p.name.to_string(), instances: p.instances, counterexample: p.counterexample })
                .collect(),
        }),
    };
    (code, text)
}
