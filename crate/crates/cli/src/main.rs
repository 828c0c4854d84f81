use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gapplanar::constructions::{
    gen_dodecahedron_diagonals, gen_multigraph_extremal, gen_nested_squares,
    gen_quasiplanar_witness, gen_wheel_witness, gen_zarankiewicz_seeded, random_polyline_drawing,
    RandomDrawingParams,
};
use gapplanar::hardness::{
    brute_solve_3partition, reduce, verify_partition, ThreePartitionInstance,
};
use gapplanar::io::{analysis_report, AssignmentDocument};
use gapplanar::render::{render_svg, ColorScheme, RenderOptions, RenderWarning};
use gapplanar::solver::{brute_force_min_k, min_gap_k, BRUTE_FORCE_GUARD};
use gapplanar::{
    compute_crossings, emit_drawing, load_drawing, parse_rational, Drawing, Error, Result,
};

#[derive(Parser)]
#[command(
    name = "gapplanar",
    version,
    about = "k-gap-planarity of geometric drawings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Squares,
    Dodecahedron,
    Zarankiewicz,
    Quasiplanar,
    Wheel,
    Multigraph,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Mono,
    Palette,
}

#[derive(Subcommand)]
enum Command {
    /// Crossings, minimum k with certificates, and structural statistics.
    Analyze {
        drawing: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generate a drawing family; `-o PREFIX` writes PREFIX.json and PREFIX.manifest.json.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        insertions: usize,
        #[arg(long, default_value_t = 3)]
        p: usize,
        #[arg(long, default_value_t = 12)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Bundle size; defaults to 19k (quasiplanar) or 1 (wheel).
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 6)]
        n0: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cased SVG; without an assignment file the minimum-k assignment is used.
    Render {
        drawing: PathBuf,
        #[arg(long)]
        assignment: Option<PathBuf>,
        #[arg(long)]
        gap_width: Option<String>,
        #[arg(long, value_enum, default_value = "mono")]
        scheme: Scheme,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce a 3-Partition instance to the gadget graph.
    Reduce {
        instance: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print only the manifest.
        #[arg(long)]
        summary: bool,
    },
    /// 3-Partition utilities.
    #[command(name = "3p")]
    ThreeP {
        #[command(subcommand)]
        action: ThreePAction,
    },
    /// Exhaustive minimum k, for cross-checking small drawings.
    Oracle {
        drawing: PathBuf,
        #[arg(long, default_value_t = BRUTE_FORCE_GUARD)]
        guard: usize,
    },
}

#[derive(Subcommand)]
enum ThreePAction {
    Solve {
        instance: PathBuf,
    },
    /// The partition file holds a list of index triples.
    Verify {
        instance: PathBuf,
        partition: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn read_drawing(path: &Path) -> Result<Drawing> {
    load_drawing(&read(path)?)
}

fn read_instance(path: &Path) -> Result<ThreePartitionInstance> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Schema(e.to_string()))
}

fn pretty<T: serde::Serialize + ?Sized>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn write_or_print(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn text_report(r: &Value) -> String {
    let mut out = format!(
        "n = {}, m = {}, crossings = {}\nk* = {}\ngap-free edges = {}\n",
        r["n"],
        r["m"],
        r["crossing_count"],
        r["k_star"],
        r["gap_free_edges"].as_array().map_or(0, Vec::len)
    );
    if let Some(w) = r["witness_below"].as_object() {
        out += &format!(
            "witness at k = {}: {} edges, {} crossings\n",
            w["k"],
            w["subset"].as_array().map_or(0, Vec::len),
            w["crossings_in_subset"]
        );
    }
    if let Some(a) = r["at_k"].as_object() {
        out += &format!("feasible at k = {}: {}\n", a["k"], a["feasible"]);
    }
    out += &format!(
        "degeneracy = {}\nmax crossings per edge = {}\nmax pairwise crossing = {}\n",
        r["degeneracy"], r["max_crossings_per_edge"], r["max_pairwise_crossing"]["size"]
    );
    if let Some(v) = r["density"]["verdict"].as_str() {
        out += &format!("density: {v}\n");
    }
    if r["planarization"].is_object() {
        let p = &r["planarization"];
        out += &format!(
            "planarization: n = {}, m = {}, f = {}, biconnected = {}\n",
            p["n"], p["m"], p["f"], p["biconnected"]
        );
    }
    out
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { drawing, k, format } => {
            let d = read_drawing(&drawing)?;
            let report = analysis_report(&d, k)?;
            match format {
                Format::Json => print!("{}", pretty(&report)?),
                Format::Text => print!("{}", text_report(&report)),
            }
        }
        Command::Gen {
            family,
            s,
            insertions,
            p,
            q,
            k,
            t,
            n0,
            seed,
            output,
        } => {
            let g = match family {
                Family::Squares => gen_nested_squares(s)?,
                Family::Dodecahedron => gen_dodecahedron_diagonals(insertions)?,
                Family::Zarankiewicz => gen_zarankiewicz_seeded(p, q, seed)?.0,
                Family::Quasiplanar => gen_quasiplanar_witness(k, t.unwrap_or(19 * k))?,
                Family::Wheel => gen_wheel_witness(k, t.unwrap_or(1))?,
                Family::Multigraph => gen_multigraph_extremal(n0)?,
                Family::Random => {
                    let (d, _) = random_polyline_drawing(seed, RandomDrawingParams::default())?;
                    let cs = compute_crossings(&d)?;
                    let manifest = json!({
                        "family": "random", "params": {"seed": seed},
                        "n": d.vertex_count(), "m": d.edge_count(), "expected_crossings": cs.len(),
                    });
                    return emit(&emit_drawing(&d), &manifest, output.as_deref());
                }
            };
            emit(
                &emit_drawing(&g.drawing),
                &serde_json::to_value(g.manifest())?,
                output.as_deref(),
            )?;
        }
        Command::Render {
            drawing,
            assignment,
            gap_width,
            scheme,
            output,
        } => {
            let d = read_drawing(&drawing)?;
            let cs = compute_crossings(&d)?;
            let ga = match assignment {
                Some(path) => {
                    let doc: AssignmentDocument = serde_json::from_str(&read(&path)?)
                        .map_err(|e| Error::Schema(e.to_string()))?;
                    doc.to_assignment(&d, &cs)?
                }
                None => min_gap_k(&cs.crossing_graph()).assignment,
            };
            let opts = RenderOptions {
                gap_width: gap_width.as_deref().map(parse_rational).transpose()?,
                scheme: match scheme {
                    Scheme::Mono => ColorScheme::Mono,
                    Scheme::Palette => ColorScheme::Palette,
                },
                ..RenderOptions::default()
            };
            let (svg, warnings) = render_svg(&d, &cs, &ga, &opts)?;
            for w in warnings {
                let RenderWarning::MergedGaps { edge } = w;
                eprintln!("warning[W_MERGED_GAPS]: gaps on edge `{edge}` merge at this gap width");
            }
            write_or_print(output.as_deref(), &svg)?;
        }
        Command::Reduce {
            instance,
            output,
            summary,
        } => {
            let g = reduce(&read_instance(&instance)?)?;
            let doc = g.to_document();
            let text = if summary {
                pretty(&doc.manifest)?
            } else {
                pretty(&doc)?
            };
            write_or_print(output.as_deref(), &text)?;
        }
        Command::ThreeP { action } => match action {
            ThreePAction::Solve { instance } => {
                let inst = read_instance(&instance)?;
                if let Err(v) = inst.validate() {
                    return Err(Error::InvalidParameter(format!("{v:?}")));
                }
                let found = brute_solve_3partition(&inst)?;
                print!("{}", pretty(&json!({ "partition": found }))?);
            }
            ThreePAction::Verify {
                instance,
                partition,
            } => {
                let inst = read_instance(&instance)?;
                let triples: Vec<[usize; 3]> = serde_json::from_str(&read(&partition)?)
                    .map_err(|e| Error::Schema(e.to_string()))?;
                print!(
                    "{}",
                    pretty(&json!({ "valid": verify_partition(&inst, &triples) }))?
                );
            }
        },
        Command::Oracle { drawing, guard } => {
            let d = read_drawing(&drawing)?;
            let cs = compute_crossings(&d)?;
            let k = brute_force_min_k(&cs.crossing_graph(), guard)?;
            print!(
                "{}",
                pretty(&json!({ "k_star": k, "crossings": cs.len() }))?
            );
        }
    }
    Ok(())
}

fn emit(drawing: &str, manifest: &Value, output: Option<&Path>) -> Result<()> {
    match output {
        Some(prefix) => {
            let base = prefix.to_string_lossy();
            fs::write(format!("{base}.json"), drawing)?;
            fs::write(format!("{base}.manifest.json"), pretty(manifest)?)?;
        }
        None => print!("{drawing}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
