//! `census` — command-line driver for census descriptors, the atlas
//! collider, and the batch plot pipeline.
//!
//! Every run is deterministic given its inputs, seed, and flags, and writes
//! a `manifest.json` echoing them next to its outputs. Thread count changes
//! scheduling only, never output bytes.

mod input;
mod outdir;

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use census_core::{
    aggregate, bfs_bmatrix, bfs_census, canonical_census, census_census_plot, circular_node_link,
    collision_tuples, enumerate_atlas, gen_barabasi_albert, gen_erdos_renyi, gen_random_tree,
    gen_stochastic_block, gen_watts_strogatz, heatmap_plot, hop_census_plot, ingest_atlas,
    measure_bytes, parse_census, reach_metrics, run_collider, serialize_census, ColorMode,
    Constituent, DescriptorId, PlotOptions,
};
use input::{load_graphs, load_single_graph, InputFormat};
use outdir::OutputDir;

#[derive(Parser)]
#[command(name = "census", version, about = "Graph census descriptors, collision analysis, and plots")]
struct Cli {
    /// Worker threads for parallel sections (default: all cores). Outputs
    /// are identical for any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate connected non-isomorphic graph corpora and write one
    /// graph6 file per order.
    Atlas {
        /// Highest order to enumerate (3..=8).
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=8))]
        max_order: u8,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the three censuses of one graph and write serialized
    /// descriptors plus derived statistics.
    Census {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Group atlas corpora by descriptor and report collisions, set
    /// membership, storage sizes, and collision tuples.
    Collide {
        /// Graph6 atlas file, one per order; repeatable.
        #[arg(long = "atlas", required = true)]
        atlas: Vec<PathBuf>,
        /// Comma-separated descriptor names, or `all`.
        #[arg(long, default_value = "all")]
        descriptors: String,
        /// Cap on collision tuples written per (order, descriptor).
        #[arg(long, default_value_t = 1000)]
        max_tuples: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render the standard ten plots per input graph.
    Plot(PlotArgs),
    /// Generate a graph and write it as an edgelist.
    Gen {
        #[command(subcommand)]
        model: GenModel,
    },
    /// Sweep one generator parameter over a geometric series, writing each
    /// step's edgelist and its node-vs-stub trajectory plot.
    Continuum {
        #[command(subcommand)]
        model: ContinuumModel,
    },
    /// Validate corpus integrity: the shell-matrix construction must equal
    /// census aggregation; optionally re-check stored census files.
    Check {
        /// Graph6 atlas files to validate; repeatable.
        #[arg(long = "atlas")]
        atlas: Vec<PathBuf>,
        /// Graph whose stored censuses should be re-verified.
        #[arg(long, requires = "census_dir")]
        graph: Option<PathBuf>,
        /// Directory holding census_node.txt / census_edge.txt /
        /// census_stub.txt previously written by `census census`.
        #[arg(long)]
        census_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct PlotArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    #[arg(long)]
    out: PathBuf,
    /// Normalize plot axes into the unit square.
    #[arg(long)]
    normalize: bool,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 600)]
    height: u32,
    /// Stroke opacity in (0, 1]; defaults by line count.
    #[arg(long)]
    opacity: Option<f64>,
    /// Line coloring: by source node index, or one uniform color.
    #[arg(long, value_enum, default_value_t = ColorChoice::Index)]
    color: ColorChoice,
    /// Linear heatmap color scale instead of log1p.
    #[arg(long)]
    linear_color: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ColorChoice {
    Index,
    Uniform,
}

#[derive(Subcommand)]
enum GenModel {
    /// Independent edge probability model.
    Er {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Ring lattice with rewiring (small-world model).
    Ws {
        #[arg(long)]
        nodes: usize,
        /// Ring degree k (even, < nodes).
        #[arg(long)]
        neighbors: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Preferential attachment (scale-free model).
    Ba {
        #[arg(long)]
        nodes: usize,
        /// Edges attached per incoming node.
        #[arg(long)]
        attach: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Planted-partition model.
    Sbm {
        /// Comma-separated block sizes, e.g. 50,100,150,200.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        p_in: f64,
        #[arg(long)]
        p_out: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Uniform random labeled tree.
    Tree {
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// The 20-node dodecahedral graph.
    Dodecahedron {
        #[arg(long)]
        out: PathBuf,
    },
    /// The 20-node Desargues graph.
    Desargues {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum ContinuumModel {
    /// Edge probability swept geometrically from start to end.
    Er {
        #[arg(long)]
        nodes: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
        #[arg(long)]
        start: f64,
        #[arg(long)]
        end: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rewiring probability swept geometrically at fixed ring degree.
    Ws {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        neighbors: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
        #[arg(long)]
        start: f64,
        #[arg(long)]
        end: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Attachment count swept geometrically (rounded to integers).
    Ba {
        #[arg(long)]
        nodes: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
        #[arg(long)]
        start: f64,
        #[arg(long)]
        end: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct Manifest {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    inputs: Vec<String>,
    flags: BTreeMap<String, String>,
    outputs: Vec<String>,
}

impl Manifest {
    fn new(command: &'static str) -> Self {
        Manifest {
            tool: "census",
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: Vec::new(),
            flags: BTreeMap::new(),
            outputs: Vec::new(),
        }
    }

    fn input(mut self, path: &std::path::Path) -> Self {
        self.inputs.push(path.display().to_string());
        self
    }

    fn flag(mut self, key: &str, value: impl ToString) -> Self {
        self.flags.insert(key.to_string(), value.to_string());
        self
    }

    fn write(mut self, dir: &mut OutputDir) -> Result<()> {
        self.outputs = dir.written();
        let json = serde_json::to_string_pretty(&self)?;
        dir.write("manifest.json", json.as_bytes())
    }
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("rayon pool already initialized")?;
    }
    match cli.command {
        Command::Atlas { max_order, out } => cmd_atlas(max_order as usize, out),
        Command::Census { input, format, out } => cmd_census(input, format, out),
        Command::Collide {
            atlas,
            descriptors,
            max_tuples,
            out,
        } => cmd_collide(atlas, &descriptors, max_tuples, out),
        Command::Plot(args) => cmd_plot(args),
        Command::Gen { model } => cmd_gen(model),
        Command::Continuum { model } => cmd_continuum(model),
        Command::Check {
            atlas,
            graph,
            census_dir,
            format,
            out,
        } => cmd_check(atlas, graph, census_dir, format, out),
    }
}

fn cmd_atlas(max_order: usize, out: PathBuf) -> Result<()> {
    let mut dir = OutputDir::create(&out)?;
    let corpora = enumerate_atlas(max_order)?;
    for corpus in &corpora {
        dir.write(
            &format!("atlas_{}.g6", corpus.order),
            corpus.to_graph6_lines().as_bytes(),
        )?;
    }
    Manifest::new("atlas")
        .flag("max_order", max_order)
        .write(&mut dir)
}

fn cmd_census(input: PathBuf, format: InputFormat, out: PathBuf) -> Result<()> {
    let g = load_single_graph(&input, format)?;
    let mut dir = OutputDir::create(&out)?;
    let ct = bfs_census(&g);
    let mut census_bytes = BTreeMap::new();
    for constituent in [Constituent::Node, Constituent::Edge, Constituent::Stub] {
        let serialized = serialize_census(ct.instance(constituent), true);
        census_bytes.insert(
            constituent.code().to_lowercase(),
            measure_bytes(&serialized),
        );
        let name = match constituent {
            Constituent::Node => "census_node.txt",
            Constituent::Edge => "census_edge.txt",
            Constituent::Stub => "census_stub.txt",
        };
        dir.write(name, serialized.as_bytes())?;
    }
    let metrics = reach_metrics(&ct);
    #[derive(Serialize)]
    struct Stats {
        node_count: usize,
        edge_count: usize,
        connected: bool,
        diameter: u32,
        radius: u32,
        census_bytes: BTreeMap<String, usize>,
    }
    let stats = Stats {
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        connected: metrics.connected,
        diameter: metrics.diameter,
        radius: metrics.radius,
        census_bytes,
    };
    dir.write("stats.json", serde_json::to_string_pretty(&stats)?.as_bytes())?;
    Manifest::new("census").input(&input).write(&mut dir)
}

fn parse_descriptors(spec: &str) -> Result<Vec<DescriptorId>> {
    if spec == "all" {
        return Ok(DescriptorId::ALL.to_vec());
    }
    spec.split(',')
        .map(|name| DescriptorId::parse(name.trim()).map_err(Into::into))
        .collect()
}

fn cmd_collide(
    atlas: Vec<PathBuf>,
    descriptors: &str,
    max_tuples: usize,
    out: PathBuf,
) -> Result<()> {
    let descriptors = parse_descriptors(descriptors)?;
    let mut dir = OutputDir::create(&out)?;
    let mut corpora = Vec::new();
    for path in &atlas {
        let corpus =
            ingest_atlas(path).with_context(|| format!("ingesting {}", path.display()))?;
        corpora.push(corpus);
    }
    corpora.sort_by_key(|c| c.order);
    let mut reports = Vec::new();
    for corpus in &corpora {
        reports.push(run_collider(corpus, &descriptors)?);
    }
    dir.write(
        "collisions.csv",
        census_core::collider::collisions_csv(&reports).as_bytes(),
    )?;
    let wants_membership = [
        DescriptorId::CensusNode,
        DescriptorId::CensusEdge,
        DescriptorId::CensusStub,
    ]
    .iter()
    .all(|id| descriptors.contains(id));
    if wants_membership {
        dir.write(
            "membership.csv",
            census_core::collider::membership_csv(&reports)?.as_bytes(),
        )?;
    }
    dir.write(
        "storage.csv",
        census_core::collider::storage_csv(&reports).as_bytes(),
    )?;
    dir.write(
        "report.json",
        serde_json::to_string_pretty(&reports)?.as_bytes(),
    )?;
    for corpus in &corpora {
        for &id in &descriptors {
            if !id.participates_in_collisions() {
                continue;
            }
            let tuples = collision_tuples(corpus, id, max_tuples)?;
            if tuples.is_empty() {
                continue;
            }
            let mut text = String::new();
            for (i, group) in tuples.iter().enumerate() {
                if i > 0 {
                    text.push('\n');
                }
                for line in group {
                    text.push_str(line);
                    text.push('\n');
                }
            }
            dir.write(
                &format!("tuples/{}_{}.g6", corpus.order, id.name()),
                text.as_bytes(),
            )?;
        }
    }
    Manifest::new("collide")
        .flag(
            "descriptors",
            descriptors
                .iter()
                .map(|d| d.name())
                .collect::<Vec<_>>()
                .join(","),
        )
        .flag("max_tuples", max_tuples)
        .write(&mut dir)
}

fn cmd_plot(args: PlotArgs) -> Result<()> {
    let graphs = load_graphs(&args.input, args.format)?;
    if graphs.is_empty() {
        bail!("{}: no graphs found", args.input.display());
    }
    let opts = PlotOptions {
        normalize: args.normalize,
        width: args.width,
        height: args.height,
        stroke_opacity: args.opacity,
        color_mode: match args.color {
            ColorChoice::Index => ColorMode::ByNodeIndex,
            ColorChoice::Uniform => ColorMode::Uniform,
        },
        log_color: !args.linear_color,
    };
    let mut dir = OutputDir::create(&args.out)?;
    let multi = graphs.len() > 1;
    let mut axes: BTreeMap<String, [u64; 2]> = BTreeMap::new();
    for (index, g) in graphs.iter().enumerate() {
        let prefix = if multi {
            format!("graph_{index:03}_")
        } else {
            String::new()
        };
        let ct = bfs_census(g);
        let named_instances = [
            ("cn", &ct.node_census),
            ("ce", &ct.edge_census),
            ("cs", &ct.stub_census),
        ];
        for (code, ci) in named_instances {
            let svg = hop_census_plot(ci, &opts)?;
            let name = format!("{prefix}hop_census_{code}.svg");
            let (hops, max_degree) = census_core::viz::hop_census_ranges(ci);
            axes.insert(name.clone(), [hops as u64, max_degree as u64]);
            dir.write(&name, svg.as_str().as_bytes())?;
        }
        for (xc, yc) in [("cn", "ce"), ("cn", "cs"), ("ce", "cs")] {
            let x = named_instances.iter().find(|(c, _)| *c == xc).unwrap().1;
            let y = named_instances.iter().find(|(c, _)| *c == yc).unwrap().1;
            let svg = census_census_plot(x, y, &opts)?;
            let name = format!("{prefix}census_census_{xc}_{yc}.svg");
            let (x_max, y_max) = census_core::viz::census_census_ranges(x, y);
            axes.insert(name.clone(), [x_max as u64, y_max as u64]);
            dir.write(&name, svg.as_str().as_bytes())?;
        }
        for (code, ci) in named_instances {
            let b = aggregate(ci, g.node_count());
            let svg = heatmap_plot(&b, &opts)?;
            let name = format!("{prefix}heatmap_b{}.svg", &code[1..]);
            axes.insert(
                name.clone(),
                [
                    b.hop_count() as u64,
                    b.degree_count().saturating_sub(1) as u64,
                ],
            );
            dir.write(&name, svg.as_str().as_bytes())?;
        }
        let svg = circular_node_link(g, &opts)?;
        dir.write(&format!("{prefix}node_link.svg"), svg.as_str().as_bytes())?;
    }
    dir.write("axes.json", serde_json::to_string_pretty(&axes)?.as_bytes())?;
    Manifest::new("plot")
        .input(&args.input)
        .flag("normalize", args.normalize)
        .flag("width", args.width)
        .flag("height", args.height)
        .flag(
            "color",
            match args.color {
                ColorChoice::Index => "index",
                ColorChoice::Uniform => "uniform",
            },
        )
        .write(&mut dir)
}

fn parse_sizes(spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .map(|token| {
            token
                .trim()
                .parse()
                .with_context(|| format!("bad block size {token:?}"))
        })
        .collect()
}

fn cmd_gen(model: GenModel) -> Result<()> {
    let (graph, out) = match model {
        GenModel::Er {
            nodes,
            prob,
            seed,
            out,
        } => (gen_erdos_renyi(nodes, prob, seed)?, out),
        GenModel::Ws {
            nodes,
            neighbors,
            prob,
            seed,
            out,
        } => (gen_watts_strogatz(nodes, neighbors, prob, seed)?, out),
        GenModel::Ba {
            nodes,
            attach,
            seed,
            out,
        } => (gen_barabasi_albert(nodes, attach, seed)?, out),
        GenModel::Sbm {
            sizes,
            p_in,
            p_out,
            seed,
            out,
        } => (
            gen_stochastic_block(&parse_sizes(&sizes)?, p_in, p_out, seed)?,
            out,
        ),
        GenModel::Tree { nodes, seed, out } => (gen_random_tree(nodes, seed), out),
        GenModel::Dodecahedron { out } => (census_core::dodecahedron(), out),
        GenModel::Desargues { out } => (census_core::desargues(), out),
    };
    if let Some(parent) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(&out, census_core::emit_edgelist(&graph))
        .with_context(|| format!("writing {}", out.display()))?;
    Ok(())
}

/// Geometric interpolation from start to end over `steps` points.
fn geometric_series(start: f64, end: f64, steps: u32) -> Vec<f64> {
    if steps == 1 {
        return vec![start];
    }
    let ratio = (end / start).powf(1.0 / (steps - 1) as f64);
    (0..steps).map(|i| start * ratio.powi(i as i32)).collect()
}

fn cmd_continuum(model: ContinuumModel) -> Result<()> {
    let (name, nodes, neighbors, steps, start, end, seed, normalize, out) = match model {
        ContinuumModel::Er {
            nodes,
            steps,
            start,
            end,
            seed,
            normalize,
            out,
        } => ("er", nodes, 0, steps, start, end, seed, normalize, out),
        ContinuumModel::Ws {
            nodes,
            neighbors,
            steps,
            start,
            end,
            seed,
            normalize,
            out,
        } => (
            "ws", nodes, neighbors, steps, start, end, seed, normalize, out,
        ),
        ContinuumModel::Ba {
            nodes,
            steps,
            start,
            end,
            seed,
            normalize,
            out,
        } => ("ba", nodes, 0, steps, start, end, seed, normalize, out),
    };
    if start <= 0.0 {
        bail!("geometric series needs a positive start parameter");
    }
    let mut dir = OutputDir::create(&out)?;
    let opts = PlotOptions {
        normalize,
        ..PlotOptions::default()
    };
    for (step, value) in geometric_series(start, end, steps).into_iter().enumerate() {
        let step_seed = seed.wrapping_add(step as u64);
        let g = match name {
            "er" => gen_erdos_renyi(nodes, value.min(1.0), step_seed)?,
            "ws" => gen_watts_strogatz(nodes, neighbors, value.min(1.0), step_seed)?,
            _ => {
                let attach = (value.round() as usize).clamp(1, nodes - 1);
                gen_barabasi_albert(nodes, attach, step_seed)?
            }
        };
        dir.write(
            &format!("step_{step:02}.el"),
            census_core::emit_edgelist(&g).as_bytes(),
        )?;
        let ct = bfs_census(&g);
        let svg = census_census_plot(&ct.node_census, &ct.stub_census, &opts)?;
        dir.write(
            &format!("step_{step:02}_cn_cs.svg"),
            svg.as_str().as_bytes(),
        )?;
    }
    Manifest::new("continuum")
        .flag("model", name)
        .flag("nodes", nodes)
        .flag("steps", steps)
        .flag("start", start)
        .flag("end", end)
        .flag("seed", seed)
        .write(&mut dir)
}

fn cmd_check(
    atlas: Vec<PathBuf>,
    graph: Option<PathBuf>,
    census_dir: Option<PathBuf>,
    format: InputFormat,
    out: PathBuf,
) -> Result<()> {
    let mut dir = OutputDir::create(&out)?;

    #[derive(Serialize)]
    struct CorpusCheck {
        path: String,
        graphs: usize,
        mismatches: usize,
    }
    #[derive(Serialize)]
    struct StoredCheck {
        file: String,
        matches: bool,
    }
    #[derive(Serialize)]
    struct Integrity {
        corpora: Vec<CorpusCheck>,
        stored_census: Vec<StoredCheck>,
        pass: bool,
    }

    let mut corpora = Vec::new();
    for path in &atlas {
        let corpus =
            ingest_atlas(path).with_context(|| format!("ingesting {}", path.display()))?;
        let mismatches = corpus
            .graphs
            .iter()
            .filter(|g| {
                let ct = bfs_census(g);
                bfs_bmatrix(g) != aggregate(&ct.node_census, g.node_count())
            })
            .count();
        corpora.push(CorpusCheck {
            path: path.display().to_string(),
            graphs: corpus.len(),
            mismatches,
        });
    }

    let mut stored_census = Vec::new();
    if let (Some(graph_path), Some(census_path)) = (graph.as_ref(), census_dir.as_ref()) {
        let g = load_single_graph(graph_path, format)?;
        let ct = bfs_census(&g);
        for (file, constituent) in [
            ("census_node.txt", Constituent::Node),
            ("census_edge.txt", Constituent::Edge),
            ("census_stub.txt", Constituent::Stub),
        ] {
            let path = census_path.join(file);
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            let matches = match parse_census(&text, constituent) {
                Ok(stored) => {
                    canonical_census(&stored) == canonical_census(ct.instance(constituent))
                }
                Err(_) => false,
            };
            stored_census.push(StoredCheck {
                file: file.to_string(),
                matches,
            });
        }
    }

    let pass =
        corpora.iter().all(|c| c.mismatches == 0) && stored_census.iter().all(|s| s.matches);
    let integrity = Integrity {
        corpora,
        stored_census,
        pass,
    };
    dir.write(
        "integrity.json",
        serde_json::to_string_pretty(&integrity)?.as_bytes(),
    )?;
    let mut manifest = Manifest::new("check");
    for path in &atlas {
        manifest = manifest.input(path);
    }
    if let Some(path) = &graph {
        manifest = manifest.input(path);
    }
    manifest.write(&mut dir)?;
    if !pass {
        bail!("integrity check failed; see integrity.json");
    }
    Ok(())
}
