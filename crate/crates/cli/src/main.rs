use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use circone::cert::{certify_c1p, certify_circ1, certify_circ1rc, certify_graph, RowMemberJson};
use circone::circ_rows::forbrow_enumerate;
use circone::formats::{read_graph, read_matrix, write_graph};
use circone::graphs::{catalog, forbidden_or_complement_cycle, is_concave_round, CatalogName, GraphCertificate};
use circone::{Certificate, Error, Instance};

#[derive(Parser)]
#[command(name = "circone", version, about = "Certifying recognition of circular-ones matrices and concave-round graphs")]
struct Cli {
    /// Pretty-print JSON and add a one-line summary per instance on stderr.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads when several input files are given.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Consecutive-ones property.
    C1p {
        #[command(subcommand)]
        action: TestAction,
    },
    /// Circular-ones property for rows.
    Circ1 {
        #[command(subcommand)]
        action: CertifyAction,
    },
    /// Circular-ones property for rows and columns.
    Circ1rc {
        #[command(subcommand)]
        action: CertifyAction,
    },
    /// Concave-round graphs.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Graphs of the forbidden-subgraph catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Enumerations of forbidden families.
    Enumerate {
        #[command(subcommand)]
        action: EnumerateAction,
    },
    /// Re-check a certificate against an instance.
    Verify { cert: PathBuf, file: PathBuf },
}

#[derive(Subcommand)]
enum TestAction {
    Test {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CertifyAction {
    Certify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphAction {
    /// Circular enumeration, or a forbidden subgraph or odd cycle of the complement.
    Recognize {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Circular enumeration, or a minimal forbidden induced subgraph.
    Certify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print a catalog graph in `p graph` format.
    Emit { name: String, k: Option<usize> },
}

#[derive(Subcommand)]
enum EnumerateAction {
    /// List the members of ForbRow with K rows.
    Forbrow { k: usize },
}

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const USAGE: u8 = 2;

fn recognize(g: &circone::Graph) -> circone::Result<Certificate> {
    let gc = match is_concave_round(g) {
        Some(order) => GraphCertificate::CircularEnumeration(order),
        None => forbidden_or_complement_cycle(g)?,
    };
    Ok((&gc).into())
}

fn summary(cert: &Certificate) -> String {
    let value: serde_json::Value = serde_json::from_str(&cert.to_json()).expect("certificates are JSON objects");
    let verdict = if cert.holds() { "holds" } else { "fails" };
    let detail = match (value.get("member"), value.get("name")) {
        (Some(m), _) => format!(" ({})", m["kind"].as_str().unwrap_or("?")),
        (_, Some(n)) => format!(" ({})", n.as_str().unwrap_or("?")),
        _ if value.get("cycle").is_some() => " (odd cycle in the complement)".to_string(),
        _ => String::new(),
    };
    format!("{}: {verdict}{detail}", cert.property())
}

fn emit(cli: &Cli, label: &Path, cert: &Certificate) {
    if cli.pretty {
        println!("{}", cert.to_json_pretty());
        eprintln!("{}: {}", label.display(), summary(cert));
    } else {
        println!("{}", cert.to_json());
    }
}

/// Runs `f` on every file, on `--jobs` threads, and prints results in input order.
fn per_file(cli: &Cli, files: &[PathBuf], f: fn(&Path) -> circone::Result<Certificate>) -> u8 {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build()
        .expect("thread pool");
    let results: Vec<circone::Result<Certificate>> = pool.install(|| files.par_iter().map(|p| f(p)).collect());
    let mut code = HOLDS;
    for (path, result) in files.iter().zip(results) {
        match result {
            Ok(cert) => {
                emit(cli, path, &cert);
                if !cert.holds() {
                    code = code.max(FAILS);
                }
            }
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                code = USAGE;
            }
        }
    }
    code
}

fn catalog_name(name: &str, k: Option<usize>) -> circone::Result<CatalogName> {
    match CatalogName::parse(name, k) {
        Ok(n) => Ok(n),
        Err(_) if k.is_none() => CatalogName::from_label(name),
        Err(e) => Err(e),
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    Ok(match &cli.verb {
        Verb::C1p { action: TestAction::Test { files } } => {
            per_file(cli, files, |p| certify_c1p(&read_matrix(p)?))
        }
        Verb::Circ1 { action: CertifyAction::Certify { files } } => {
            per_file(cli, files, |p| certify_circ1(&read_matrix(p)?))
        }
        Verb::Circ1rc { action: CertifyAction::Certify { files } } => {
            per_file(cli, files, |p| certify_circ1rc(&read_matrix(p)?))
        }
        Verb::Graph { action: GraphAction::Recognize { files } } => {
            per_file(cli, files, |p| recognize(&read_graph(p)?))
        }
        Verb::Graph { action: GraphAction::Certify { files } } => {
            per_file(cli, files, |p| certify_graph(&read_graph(p)?))
        }
        Verb::Catalog { action: CatalogAction::Emit { name, k } } => {
            print!("{}", write_graph(&catalog(catalog_name(name, *k)?)?));
            HOLDS
        }
        Verb::Enumerate { action: EnumerateAction::Forbrow { k } } => {
            let members: Vec<RowMemberJson> = forbrow_enumerate(*k)?.iter().map(RowMemberJson::from).collect();
            let doc = serde_json::json!({ "family": "forbrow", "k": k, "count": members.len(), "members": members });
            if cli.pretty {
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON"));
                eprintln!("ForbRow with {k} rows: {} members", members.len());
            } else {
                println!("{doc}");
            }
            HOLDS
        }
        Verb::Verify { cert, file } => {
            let text = std::fs::read_to_string(cert)
                .map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", cert.display()) })?;
            let c = Certificate::from_json(&text)?;
            let inst = match c {
                Certificate::ConcaveRound(_) => Instance::Graph(read_graph(file)?),
                _ => Instance::Matrix(read_matrix(file)?),
            };
            let ok = c.verify(&inst);
            let doc = serde_json::json!({ "property": c.property(), "valid": ok });
            println!("{doc}");
            if cli.pretty {
                eprintln!("certificate {}", if ok { "valid" } else { "invalid" });
            }
            if ok {
                HOLDS
            } else {
                FAILS
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { HOLDS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
