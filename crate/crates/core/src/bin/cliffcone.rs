use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use clifford_cones::builders::strong_semilattice_of_groups;
use clifford_cones::fixtures::fixture;
use clifford_cones::report::{cone_dump, verify_report, Summary};
use clifford_cones::verify::Budgets;
use clifford_cones::{Error, FiniteSemigroup, NormalCategory, SlgSpec, TlSemigroup};

#[derive(Parser)]
#[command(
    name = "cliffcone",
    version,
    about = "Normal categories and normal cones of finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the Cayley table and a structural summary.
    Build(Common),
    /// Export L(S) and R(S).
    Category {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// Enumerate the normal cones of L(S).
    Cones(Common),
    /// Run every check and print a PASS/FAIL/N-A table.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Include wall-clock timings in the JSON report (breaks byte-for-byte reproducibility).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
#[group(skip)]
struct Common {
    /// Builtin semigroup: b2, cl5, diamond, s3, cN, zN, slg-TOP-BOTTOM[-trivial].
    #[arg(long, required_unless_present_any = ["table", "slg"], conflicts_with_all = ["table", "slg"])]
    fixture: Option<String>,
    /// Cayley table in text format.
    #[arg(long, conflicts_with = "slg")]
    table: Option<PathBuf>,
    /// Strong semilattice of groups as JSON.
    #[arg(long)]
    slg: Option<PathBuf>,
    /// Write artifacts here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "text")]
    format: Vec<Format>,
    /// Budget for cone enumeration (per apex) and isomorphism searches.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

impl Common {
    fn wants(&self, f: Format) -> bool {
        self.format.contains(&f)
    }

    fn budgets(&self) -> Budgets {
        match self.budget {
            Some(n) => Budgets {
                enumeration: n,
                search: n,
            },
            None => Budgets::default(),
        }
    }
}

enum Failure {
    Input(String),
    Budget(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn load(common: &Common) -> Result<FiniteSemigroup, Failure> {
    let read = |p: &Path| {
        fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
    };
    if let Some(name) = &common.fixture {
        return fixture(name).ok_or_else(|| Failure::Input(format!("unknown fixture {name:?}")));
    }
    if let Some(path) = &common.table {
        return Ok(FiniteSemigroup::parse_text(&read(path)?)?);
    }
    let path = common.slg.as_ref().expect("clap enforces one input");
    let spec = SlgSpec::from_json(&read(path)?)?;
    Ok(strong_semilattice_of_groups(&spec)?)
}

struct Artifacts(Vec<(String, String)>);

impl Artifacts {
    fn push(&mut self, name: impl Into<String>, content: String) {
        self.0.push((name.into(), content));
    }

    fn emit(self, out: Option<&Path>) -> Result<(), Failure> {
        match out {
            Some(dir) => {
                fs::create_dir_all(dir)
                    .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
                for (name, content) in self.0 {
                    let path = dir.join(name);
                    fs::write(&path, content)
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                }
            }
            None => {
                for (_, content) in self.0 {
                    print!("{content}");
                }
            }
        }
        Ok(())
    }
}

fn json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn category_text(c: &NormalCategory) -> String {
    let mut out = format!(
        "{:?} category: {} objects, {} morphisms\n",
        c.side(),
        c.object_count(),
        c.morphism_count()
    );
    for (i, &e) in c.objects().iter().enumerate() {
        let homs: Vec<String> = (0..c.object_count())
            .map(|j| c.hom_at(i, j).len().to_string())
            .collect();
        out.push_str(&format!(
            "  object {e}: |ideal| = {}, hom sizes {}\n",
            c.object_size(i),
            homs.join(" ")
        ));
    }
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = match &cli.command {
        Command::Build(c) | Command::Cones(c) => c,
        Command::Category { common, .. } | Command::Verify { common, .. } => common,
    };
    if let Some(jobs) = common.jobs {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global();
    }
    let s = load(common)?;
    let mut artifacts = Artifacts(Vec::new());
    let mut failed = false;

    match &cli.command {
        Command::Build(_) => {
            let summary = Summary::new(&s);
            artifacts.push("semigroup.table", s.to_text());
            if common.wants(Format::Text) {
                artifacts.push("summary.txt", summary.to_text());
            }
            if common.wants(Format::Json) {
                artifacts.push("summary.json", json(&summary));
            }
        }
        Command::Category { side, .. } => {
            let mut cats = Vec::new();
            if matches!(side, SideArg::Left | SideArg::Both) {
                cats.push(("L", NormalCategory::build_l(&s)?));
            }
            if matches!(side, SideArg::Right | SideArg::Both) {
                cats.push(("R", NormalCategory::build_r(&s)?));
            }
            for (name, c) in &cats {
                if common.wants(Format::Text) {
                    artifacts.push(format!("{name}.txt"), category_text(c));
                }
                if common.wants(Format::Dot) {
                    artifacts.push(format!("{name}.dot"), c.to_dot());
                }
                if common.wants(Format::Json) {
                    artifacts.push(format!("{name}.json"), json(&c.to_json()));
                }
            }
        }
        Command::Cones(_) => {
            let l = NormalCategory::build_l(&s)?;
            let tl = TlSemigroup::build(&l, common.budgets().enumeration)?;
            let dump = cone_dump(&l, &tl);
            if common.wants(Format::Text) {
                let mut text = format!("{} cones\n", dump.len());
                for (i, entry) in dump.iter().enumerate() {
                    let comps: Vec<String> = entry
                        .components
                        .iter()
                        .map(|(e, u, f)| format!("({e},{u},{f})"))
                        .collect();
                    let tag = match entry.witness {
                        Some(a) => format!("principal rho^{a}"),
                        None => "non-principal".into(),
                    };
                    text.push_str(&format!(
                        "{i}: apex {} [{}] {tag}\n",
                        entry.apex,
                        comps.join(" ")
                    ));
                }
                artifacts.push("cones.txt", text);
            }
            if common.wants(Format::Json) {
                artifacts.push("cones.json", json(&dump));
            }
        }
        Command::Verify { timings, .. } => {
            let start = Instant::now();
            let report = verify_report(&s, common.budgets())?;
            failed = report.failed();
            if common.wants(Format::Text) {
                artifacts.push("report.txt", report.to_text());
            }
            if common.wants(Format::Json) {
                let mut value = serde_json::to_value(&report).expect("reports serialize");
                if *timings {
                    value["timings_ms"] =
                        serde_json::json!({ "total": start.elapsed().as_millis() as u64 });
                }
                artifacts.push("report.json", json(&value));
            }
        }
    }
    artifacts.emit(common.out.as_deref())?;
    if failed {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(4)
        }
    }
}
