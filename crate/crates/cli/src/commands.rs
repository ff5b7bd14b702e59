//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tifs_core::address::{absolute_addresses, address_blow_up, tile_from_absolute};
use tifs_core::dynamics::{self, Verdict};
use tifs_core::geometry::{self, DEFAULT_BURN_IN};
use tifs_core::symbolic::omega;
use tifs_core::tiling::{canonical_tiling, tiling_of};
use tifs_core::{DottedAddress, Error, Orientation, Tifs, Tiling, Vertex, Word};

use crate::config::{self, ConfigError};
use crate::dump;
use crate::render::{self, Palette, RenderError, RenderSpec, Viewport};

#[derive(Parser, Debug)]
#[command(name = "tifs", version, about = "Tilings from graph-directed iterated function systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// System description (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Which {
    /// Canonical tiling `T_k`.
    #[arg(short, long = "level")]
    k: Option<u32>,
    /// Blow-up `Π(θ)` of a reversed word, e.g. `21` or `∅`.
    #[arg(long)]
    theta: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a system description.
    Validate {
        #[command(flatten)]
        io: Io,
    },
    /// Symbolic tiling `Ω_k`, one word per line.
    Omega {
        #[command(flatten)]
        io: Io,
        #[arg(short, long = "level")]
        k: u32,
        /// Keep words leaving this vertex id.
        #[arg(long)]
        root: Option<u32>,
        /// Print relative addresses `∅.σ`.
        #[arg(long)]
        dotted: bool,
    },
    /// Tiles of `T_k` or `Π(θ)`.
    Tiles {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        root: Option<u32>,
    },
    /// Absolute addresses: of every tile of `Π(θ)`, or of one tile under several contexts.
    Addresses {
        #[command(flatten)]
        io: Io,
        #[arg(long, conflicts_with = "tile")]
        theta: Option<String>,
        /// Tile given by an absolute address `θ.ω`.
        #[arg(long, requires = "context")]
        tile: Option<String>,
        #[arg(long)]
        context: Vec<String>,
    },
    /// Deterministic attractor cloud.
    Attractor {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        depth: u32,
    },
    /// Chaos-game cloud.
    Chaos {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'n', long)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BURN_IN)]
        burn_in: usize,
    },
    /// Similarity dimension, ten decimals.
    Dimension {
        #[command(flatten)]
        io: Io,
    },
    /// Search for an isometry carrying `Π(ψ)` onto `Π(θ)`.
    Equiv {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        psi: String,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Expand and split.
    Inflate {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        root: Option<u32>,
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Amalgamate and shrink.
    Deflate {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        root: Option<u32>,
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Local-rigidity heuristic.
    Rigidity {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 12)]
        depth: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// SVG of a tiling, or PPM of an attractor cloud.
    Render {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value_t = Kind::Tiling)]
        kind: Kind,
        #[arg(short, long = "level")]
        k: Option<u32>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        root: Option<u32>,
        /// Realization depth for 2D tiles and deterministic clouds.
        #[arg(long, default_value_t = 6)]
        depth: u32,
        #[arg(short = 'n', long, default_value_t = 100_000)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 800)]
        height: u32,
        /// `x0,x1` or `x0,x1,y0,y1`; defaults to the bounding box.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        viewport: Option<Vec<f64>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Tiling,
    Attractor,
    Chaos,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Config(ConfigError::Io { .. }) => 2,
            Failure::Config(_) => 1,
            Failure::Core(e) | Failure::Render(RenderError::Core(e)) if is_usage(e) => 2,
            _ => 1,
        }
    }
}

/// Errors caused by what was typed on the command line rather than by the system.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::WordSyntax(_)
            | Error::InadmissibleWord(_)
            | Error::UnknownSymbol(_)
            | Error::UnknownVertex(_)
            | Error::InvalidAddress(_)
    )
}

/// Runs the command line `args` (program name first). Returns the exit status:
/// 0 on success, 1 when the system or the requested operation fails, 2 on usage
/// errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {f}");
            f.exit_code()
        }
    }
}

fn load(io: &Io, stderr: &mut dyn Write) -> Result<Tifs, Failure> {
    let v = config::load(&io.config)?;
    for w in &v.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(v.tifs)
}

fn emit(io: &Io, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match &io.out {
        Some(path) => fs::write(path, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

fn reversed(text: &str) -> Result<Word, Failure> {
    Ok(Word::parse(text, Orientation::Reversed)?)
}

fn vertex(t: &Tifs, id: Option<u32>) -> Result<Option<Vertex>, Failure> {
    Ok(id.map(|id| t.vertex_by_id(id)).transpose()?)
}

fn select(t: &Tifs, which: &Which, root: Option<u32>) -> Result<Tiling, Failure> {
    let root = vertex(t, root)?;
    match (which.k, &which.theta) {
        (Some(k), _) => Ok(canonical_tiling(t, k, root)),
        (None, Some(theta)) => {
            if root.is_some() {
                return Err(Failure::Usage(String::from("--root only applies to canonical tilings")));
            }
            Ok(tiling_of(t, &reversed(theta)?)?)
        }
        (None, None) => Err(Failure::Usage(String::from("give --level or --theta"))),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Validate { io } => {
            let t = load(&io, stderr)?;
            let text = format!(
                "valid\tdimension {}\tmaps {}\tvertices {}\tbase {}\ta_max {}\n",
                t.dim(),
                t.edge_count(),
                t.vertex_count(),
                t.base_text(),
                t.a_max()
            );
            emit(&io, text.as_bytes(), stdout)
        }
        Command::Omega { io, k, root, dotted } => {
            let t = load(&io, stderr)?;
            let words = omega(&t, k, vertex(&t, root)?);
            let mut text = String::new();
            for w in &words {
                if dotted {
                    text.push_str("∅.");
                }
                text.push_str(&w.to_string());
                text.push('\n');
            }
            emit(&io, text.as_bytes(), stdout)
        }
        Command::Tiles { io, which, root } => {
            let t = load(&io, stderr)?;
            let tiling = select(&t, &which, root)?;
            emit(&io, dump::tiles(&t, &tiling)?.as_bytes(), stdout)
        }
        Command::Addresses { io, theta, tile, context } => {
            let t = load(&io, stderr)?;
            let mut text = String::new();
            match (theta, tile) {
                (Some(theta), None) => {
                    let (tiling, addrs) = address_blow_up(&t, &reversed(&theta)?)?;
                    for (tile, addr) in tiling.tiles().iter().zip(addrs) {
                        text.push_str(&format!("{}\t{}\n", tile.body, addr));
                    }
                }
                (None, Some(tile)) => {
                    let addr = DottedAddress::parse(&tile)?;
                    let tile = tile_from_absolute(&t, &addr)?;
                    let contexts = context.iter().map(|c| reversed(c)).collect::<Result<Vec<_>, _>>()?;
                    for a in absolute_addresses(&t, &tile, &contexts)? {
                        text.push_str(&format!("{a}\n"));
                    }
                }
                _ => return Err(Failure::Usage(String::from("give --theta or --tile with --context"))),
            }
            emit(&io, text.as_bytes(), stdout)
        }
        Command::Attractor { io, depth } => {
            let t = load(&io, stderr)?;
            let cloud = geometry::attractor_deterministic(&t, depth, &t.seeds())?;
            emit(&io, dump::points(&t, &cloud).as_bytes(), stdout)
        }
        Command::Chaos { io, points, seed, burn_in } => {
            let t = load(&io, stderr)?;
            let cloud = geometry::chaos_game(&t, points, seed, burn_in);
            emit(&io, dump::points(&t, &cloud).as_bytes(), stdout)
        }
        Command::Dimension { io } => {
            let t = load(&io, stderr)?;
            emit(&io, format!("{:.10}\n", t.hausdorff_dimension()?).as_bytes(), stdout)
        }
        Command::Equiv { io, theta, psi, bound } => {
            let t = load(&io, stderr)?;
            let text = match dynamics::check_equivalence(&t, &reversed(&theta)?, &reversed(&psi)?, bound) {
                Ok(w) => format!("equivalent\tp {}\tq {}\n{}\n", w.p, w.q, dump::map(&w.e)),
                Err(Error::Inconclusive { bound }) => format!("inconclusive\tbound {bound}\n"),
                Err(e) => return Err(e.into()),
            };
            emit(&io, text.as_bytes(), stdout)
        }
        Command::Inflate { io, which, root, times } => {
            let t = load(&io, stderr)?;
            let mut tiling = select(&t, &which, root)?;
            for _ in 0..times {
                tiling = dynamics::inflate(&t, &tiling);
            }
            emit(&io, dump::tiles(&t, &tiling)?.as_bytes(), stdout)
        }
        Command::Deflate { io, which, root, times } => {
            let t = load(&io, stderr)?;
            let mut tiling = select(&t, &which, root)?;
            for _ in 0..times {
                tiling = dynamics::deflate(&t, &tiling)?;
            }
            emit(&io, dump::tiles(&t, &tiling)?.as_bytes(), stdout)
        }
        Command::Rigidity { io, depth, tol } => {
            let t = load(&io, stderr)?;
            let r = dynamics::neighbor_map_check(&t, depth, tol)?;
            let verdict = match r.verdict {
                Verdict::Passes => "passes",
                Verdict::Fails => "fails",
                Verdict::Inconclusive => "inconclusive",
            };
            let mut text = format!("{verdict}\tdepth {}\tcandidates {}\n", r.depth, r.candidates);
            for w in &r.witnesses {
                text.push_str(&format!("witness\t{}\n", dump::map(w)));
            }
            for w in &r.undecided {
                text.push_str(&format!("undecided\t{}\n", dump::map(w)));
            }
            emit(&io, text.as_bytes(), stdout)
        }
        Command::Render { io, kind, k, theta, root, depth, points, seed, width, height, viewport } => {
            let t = load(&io, stderr)?;
            let palette = Palette::for_system(&t);
            let given = match viewport {
                None => None,
                Some(v) if v.len() == 2 * t.dim() => Some(Viewport {
                    min: v.iter().step_by(2).copied().collect(),
                    max: v.iter().skip(1).step_by(2).copied().collect(),
                }),
                Some(v) => {
                    return Err(Failure::Usage(format!(
                        "--viewport needs {} numbers for dimension {}, got {}",
                        2 * t.dim(),
                        t.dim(),
                        v.len()
                    )))
                }
            };
            let bytes = match kind {
                Kind::Tiling => {
                    let tiling = select(&t, &Which { k, theta }, root)?;
                    let viewport = match given {
                        Some(v) => v,
                        None => render::tiling_viewport(&t, &tiling, depth)?,
                    };
                    let spec = RenderSpec { viewport, width, height, depth, palette };
                    render::render_svg(&t, &tiling, &spec)?.into_bytes()
                }
                Kind::Attractor | Kind::Chaos => {
                    let cloud = if kind == Kind::Attractor {
                        geometry::attractor_deterministic(&t, depth, &t.seeds())?
                    } else {
                        geometry::chaos_game(&t, points, seed, DEFAULT_BURN_IN)
                    };
                    let viewport = given.unwrap_or_else(|| render::cloud_viewport(&cloud));
                    let spec = RenderSpec { viewport, width, height, depth, palette };
                    render::render_ppm(&cloud, &spec)?
                }
            };
            emit(&io, &bytes, stdout)
        }
    }
}
