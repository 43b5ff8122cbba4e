use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use o1p::book::{book_embed, verify_p1p2p3};
use o1p::diagpicker::{partition, triangulate_quadrangulation};
use o1p::generators::{gen_example, gen_grid_worstcase, gen_random_quad, gen_two_pole};
use o1p::io::book::{parse_book, write_book};
use o1p::io::dot::export_dot;
use o1p::io::o1p::{parse_o1p, write_o1p, write_optimal};
use o1p::io::rbc::{parse_rbc, write_rbc};
use o1p::io::report::{book_report, coloring_report, grid_report, oracle_report, write_report, Report};
use o1p::io::svg::export_svg;
use o1p::optimal::{build_optimal, extract_quadrangulation, optimal_from_raw, RawOnePlaneGraph};
use o1p::oracle::{oracle_enumerate, OracleOptions, DEFAULT_BUDGET};
use o1p::quad::validate_quadrangulation;
use o1p::verify::{grid_degree_bound, verify_coloring};
use o1p::{OptimalOnePlaneGraph, Quadrangulation, Trust};

/// Red/blue partitions, book embeddings and certificates for optimal
/// 1-planar graphs.
///
/// Paths may be `-` for stdin or stdout. Exit status is 0 on success, 1 when
/// an input or result fails validation, 2 on a usage error.
#[derive(Parser)]
#[command(name = "o1p", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Example,
    TwoPole,
    Grid,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated optimal 1-planar graph as O1P/1.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Number of pole-joining edge pairs (two-pole).
        #[arg(long)]
        k: Option<usize>,
        /// Grid side length (grid).
        #[arg(long)]
        h: Option<usize>,
        /// Vertex count (random).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short, default_value = "-")]
        out: PathBuf,
    },
    /// Compute a red/blue partition with red degree at most 4, as RBC/1.
    Partition {
        input: PathBuf,
        #[arg(long, short, default_value = "-")]
        out: PathBuf,
        /// Also write the colored graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Triangulate a quadrangulation by adding one diagonal per face.
    Triangulate {
        input: PathBuf,
        #[arg(long, short, default_value = "-")]
        out: PathBuf,
        /// Write an RPT/1 report with the largest degree increase.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compute a 2-page book embedding of the quadrangulation, as BOOK/1.
    BookEmbed {
        input: PathBuf,
        #[arg(long, short, default_value = "-")]
        out: PathBuf,
        /// Also draw the spine layout as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check a BOOK/1 embedding against its graph.
    BookVerify { input: PathBuf, book: PathBuf },
    /// Check an RBC/1 coloring against its graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Also write the report as RPT/1.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Enumerate every one-diagonal-per-face selection.
    Oracle {
        graph: PathBuf,
        /// Largest face count to enumerate.
        #[arg(long, env = "O1P_ORACLE_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Track the largest red degree of these vertices over forest colorings.
        #[arg(long, value_delimiter = ',')]
        watch: Vec<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate the degree lower bound for the h x h grid instance.
    CertifyGrid {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Draw a graph as DOT (optionally colored) or its book embedding as SVG.
    Export {
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        /// RBC/1 coloring to apply (dot).
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// BOOK/1 embedding to draw; computed if omitted (svg).
        #[arg(long)]
        book: Option<PathBuf>,
        #[arg(long, short, default_value = "-")]
        out: PathBuf,
    },
}

type Res<T> = std::result::Result<T, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Res<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// Writes through a temporary file in the target directory, then renames.
fn write(path: &Path, text: &str) -> Res<()> {
    if path == Path::new("-") {
        return std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("stdout: {e}"));
    }
    let err = |e: std::io::Error| format!("{}: {e}", path.display());
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(err)?;
    tmp.write_all(text.as_bytes()).map_err(err)?;
    tmp.persist(path).map_err(|e| err(e.error))?;
    Ok(())
}

fn load_raw(path: &Path) -> Res<RawOnePlaneGraph> {
    parse_o1p(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_optimal(path: &Path) -> Res<OptimalOnePlaneGraph> {
    optimal_from_raw(&load_raw(path)?, Trust::Verify).map_err(|e| e.to_string())
}

/// A plain quadrangulation file, or the quadrangulation under an optimal
/// 1-planar graph.
fn load_quad(path: &Path) -> Res<Quadrangulation> {
    let raw = load_raw(path)?;
    let q = if raw.crossings.is_empty() {
        validate_quadrangulation(raw.embedding)
    } else {
        extract_quadrangulation(&raw)
    };
    q.map_err(|e| e.to_string())
}

fn emit_report(r: &Report, path: Option<&Path>) -> Res<()> {
    print!("{}", r.to_lines());
    match path {
        Some(p) => write(p, &write_report(r)),
        None => Ok(()),
    }
}

fn need(v: Option<usize>, flag: &str) -> Res<usize> {
    v.ok_or_else(|| format!("this family needs --{flag}"))
}

fn run(cmd: Cmd) -> Res<bool> {
    let e = |e: o1p::Error| e.to_string();
    match cmd {
        Cmd::Gen {
            family,
            k,
            h,
            n,
            seed,
            out,
        } => {
            let g = match family {
                Family::Example => gen_example(),
                Family::TwoPole => gen_two_pole(need(k, "k")?).map_err(e)?,
                Family::Grid => gen_grid_worstcase(need(h, "h")?).map_err(e)?.graph,
                Family::Random => build_optimal(gen_random_quad(need(n, "n")?, seed).map_err(e)?).map_err(e)?,
            };
            write(&out, &write_optimal(&g))?;
            Ok(true)
        }
        Cmd::Partition { input, out, dot } => {
            let (g, c) = partition(&load_raw(&input)?).map_err(e)?;
            write(&out, &write_rbc(&g, &c).map_err(e)?)?;
            if let Some(p) = dot {
                write(&p, &export_dot(&g, Some(&c)))?;
            }
            Ok(true)
        }
        Cmd::Triangulate { input, out, report } => {
            let t = triangulate_quadrangulation(&load_quad(&input)?).map_err(e)?;
            let raw = RawOnePlaneGraph {
                embedding: t.embedding.clone(),
                crossings: Vec::new(),
            };
            write(&out, &write_o1p(&raw))?;
            if let Some(p) = report {
                let mut r = Report::default();
                r.push("vertices", t.embedding.num_vertices());
                r.push("edges", t.embedding.num_edges());
                r.push("max_degree_increase", t.max_increase());
                write(&p, &write_report(&r))?;
            }
            Ok(true)
        }
        Cmd::BookEmbed { input, out, svg } => {
            let q = load_quad(&input)?;
            let d = book_embed(&q).map_err(e)?;
            write(&out, &write_book(&d))?;
            if let Some(p) = svg {
                write(&p, &export_svg(&q, &d))?;
            }
            Ok(true)
        }
        Cmd::BookVerify { input, book } => {
            let q = load_quad(&input)?;
            let d = parse_book(&read(&book)?).map_err(e)?;
            if d.spine().len() != q.num_vertices() || d.pages().len() != q.embedding().num_edges() {
                return Err("book does not match the graph's vertex or edge count".into());
            }
            let r = verify_p1p2p3(&q, &d);
            emit_report(&book_report(&r), None)?;
            Ok(r.all())
        }
        Cmd::Verify {
            graph,
            coloring,
            report,
        } => {
            let g = load_optimal(&graph)?;
            let c = parse_rbc(&read(&coloring)?, &g).map_err(e)?;
            let r = verify_coloring(&g, &c).map_err(e)?;
            emit_report(&coloring_report(&r), report.as_deref())?;
            Ok(r.one_red_per_pair && r.blue_is_maximal_plane)
        }
        Cmd::Oracle {
            graph,
            budget,
            watch,
            report,
        } => {
            let g = load_optimal(&graph)?;
            if let Some(&v) = watch.iter().find(|&&v| v >= g.num_vertices()) {
                return Err(format!("watched vertex {v} is not in the graph"));
            }
            let r = oracle_enumerate(&g, &OracleOptions { budget, watch }).map_err(e)?;
            emit_report(&oracle_report(&r), report.as_deref())?;
            Ok(true)
        }
        Cmd::CertifyGrid { h, report } => {
            let b = grid_degree_bound(h).map_err(e)?;
            emit_report(&grid_report(&b), report.as_deref())?;
            Ok(true)
        }
        Cmd::Export {
            graph,
            format,
            coloring,
            book,
            out,
        } => {
            let text = match format {
                Format::Dot => {
                    let g = load_optimal(&graph)?;
                    let c = match coloring {
                        Some(p) => Some(parse_rbc(&read(&p)?, &g).map_err(e)?),
                        None => None,
                    };
                    export_dot(&g, c.as_ref())
                }
                Format::Svg => {
                    let q = load_quad(&graph)?;
                    let d = match book {
                        Some(p) => parse_book(&read(&p)?).map_err(e)?,
                        None => book_embed(&q).map_err(e)?,
                    };
                    if d.spine().len() != q.num_vertices() || d.pages().len() != q.embedding().num_edges() {
                        return Err("book does not match the graph's vertex or edge count".into());
                    }
                    export_svg(&q, &d)
                }
            };
            write(&out, &text)?;
            Ok(true)
        }
    }
}
