use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rgk::colorings::{burr_coloring, necessity_coloring, red_avoids, verify_no_blue_target_with_budget};
use rgk::embedding::find_embedding_with_budget;
use rgk::goodness::{decide_goodness, decide_goodness_multisize, snd, GoodnessOptions};
use rgk::invariants::{burr_value, min_color_class};
use rgk::ramsey::{arrows, ramsey_number, MAX_ARROWING_ORDER};
use rgk::trees::enumerate_free_trees;
use rgk::{graph6, Embedding, GoodnessProblem, Graph, HostFamily, NecessityParams, SearchBudget};

const EXIT_INVALID: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "rgk", version, about = "Ramsey goodness of complete multipartite graphs")]
struct Cli {
    /// Worker threads for per-tree and per-class searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Node-expansion cap for each embedding search.
    #[arg(long, global = true, env = "RGK_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smallest positive non-divisor of alpha.
    Snd {
        #[arg(long)]
        alpha: u64,
    },
    /// Free trees on n vertices, one graph6 per line.
    Trees {
        #[arg(long)]
        n: usize,
    },
    /// Chromatic number, chromatic surplus and optional Burr bound.
    Invariants {
        #[arg(long)]
        graph: String,
        /// Order of H for the bound (chi - 1)(h - 1) + s.
        #[arg(long)]
        h: Option<usize>,
    },
    /// Subgraph embedding of a pattern into a host.
    Embed {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
    },
    /// Decide goodness through the tree-embedding criterion.
    Goodness(GoodnessArgs),
    /// Build a critical colouring and check it.
    Coloring(ColoringArgs),
    /// Exact small Ramsey numbers by exhaustive search.
    Ramsey {
        /// The red graph G.
        #[arg(long, visible_alias = "g")]
        graph: String,
        /// The blue graph H.
        #[arg(long, visible_alias = "h")]
        pattern: String,
        /// Largest order searched.
        #[arg(long, default_value_t = 7)]
        max: usize,
        /// Only decide whether K_n arrows (G, H).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct GoodnessArgs {
    #[arg(long)]
    graph: String,
    /// One part size, or several separated by commas for the one-way check.
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<u64>,
    #[arg(long)]
    p: Option<u64>,
    /// `q,beta` for H = K_{q+1}(alpha; beta); H = K_1 when absent.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    family: Option<Vec<u64>>,
    /// Check every tree even after one fails.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Args, Debug)]
struct ColoringArgs {
    /// Tree on snd(alpha) vertices; selects the necessity colouring.
    #[arg(long)]
    tree: Option<String>,
    #[arg(long)]
    alpha: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Order of H (1 for K_1).
    #[arg(long)]
    h: Option<usize>,
    /// Target G: red side is checked against it, or the Burr colouring is
    /// built from it when no tree is given.
    #[arg(long)]
    graph: Option<String>,
}

/// Text lines and the JSON document for one run.
struct Report {
    text: String,
    json: Value,
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    Ok(graph6::decode(line)?)
}

fn map_text(e: &Embedding) -> String {
    e.as_slice().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn require<T>(v: Option<T>, flag: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| anyhow::anyhow!("--{flag} is required"))
}

fn run_snd(alpha: u64) -> anyhow::Result<Report> {
    let s = snd(alpha)?;
    Ok(Report { text: format!("{s}\n"), json: json!({ "alpha": alpha, "snd": s }) })
}

fn run_trees(n: usize) -> anyhow::Result<Report> {
    let set = enumerate_free_trees(n)?;
    let mut text = String::new();
    for t in &set.trees {
        writeln!(text, "{t}")?;
    }
    let json = json!({
        "n": n,
        "count": set.len(),
        "trees": set.trees,
        "level_sequences": set.level_sequences,
    });
    Ok(Report { text, json })
}

fn run_invariants(graph: &str, h: Option<usize>) -> anyhow::Result<Report> {
    let g = read_graph(graph)?;
    let profile = min_color_class(&g)?;
    let burr = h.map(|h| burr_value(&profile, h)).transpose()?;
    let mut text = format!(
        "order {}\nedges {}\nchi {}\ns {}\nwitness {}\n",
        g.order(),
        g.edge_count(),
        profile.chi,
        profile.s,
        profile.witness.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    if let Some(b) = burr {
        writeln!(text, "burr_bound {b}")?;
    }
    let json = json!({
        "graph": g,
        "order": g.order(),
        "edges": g.edge_count(),
        "chi": profile.chi,
        "s": profile.s,
        "witness": profile.witness,
        "h": h,
        "burr_bound": burr,
    });
    Ok(Report { text, json })
}

fn run_embed(pattern: &str, host: &str, budget: SearchBudget) -> anyhow::Result<Report> {
    let (p, h) = (read_graph(pattern)?, read_graph(host)?);
    let found = find_embedding_with_budget(&p, &h, budget)?;
    let text = match &found {
        Some(e) => format!("found\nmap {}\n", map_text(e)),
        None => "none\n".to_string(),
    };
    let json = json!({ "pattern": p, "host": h, "found": found.is_some(), "embedding": found });
    Ok(Report { text, json })
}

fn family_of(spec: Option<Vec<u64>>) -> anyhow::Result<HostFamily> {
    Ok(match spec.as_deref() {
        None => HostFamily::K1,
        Some([q, beta]) => HostFamily::Multipartite { q: *q, beta: *beta },
        Some(_) => bail!("--family expects q,beta"),
    })
}

fn run_goodness(args: GoodnessArgs, budget: SearchBudget) -> anyhow::Result<Report> {
    let g = read_graph(&args.graph)?;
    let opts = GoodnessOptions { budget, exhaustive: args.exhaustive };
    let tree_lines = |trees: &[Graph], embeddings: &[Option<Embedding>], text: &mut String| {
        for (i, (t, e)) in trees.iter().zip(embeddings).enumerate() {
            let status = match e {
                Some(e) => format!("embedded {}", map_text(e)),
                None => "none".to_string(),
            };
            let _ = writeln!(text, "tree {i} {t} {status}");
        }
    };
    if args.alpha.len() > 1 {
        if args.p.is_some() || args.family.is_some() {
            bail!("--p and --family apply to a single --alpha");
        }
        let cert = decide_goodness_multisize(&g, &args.alpha, opts)?;
        let mut text = format!(
            "verdict {}\nsnd {}\nchi {} s {} m {}\nclaimed {}n+{}\n",
            verdict_name(cert.verdict),
            cert.snd,
            cert.chi,
            cert.s,
            cert.m,
            cert.claimed_value.slope,
            cert.claimed_value.intercept
        );
        tree_lines(&cert.trees, &cert.embeddings, &mut text);
        for note in &cert.notes {
            writeln!(text, "note {note}")?;
        }
        return Ok(Report { text, json: serde_json::to_value(&cert)? });
    }
    let alpha = args.alpha[0];
    let p = require(args.p, "p")?;
    let prob = GoodnessProblem::new(g, alpha, p, family_of(args.family)?)?;
    let cert = decide_goodness(&prob, opts)?;
    let mut text = format!(
        "verdict {}\nalpha {} snd {} p {} h {}\nchi {} s {} m {}\nclaimed {}n+{}\n",
        verdict_name(cert.verdict),
        cert.alpha,
        cert.snd,
        cert.p,
        cert.h,
        cert.chi,
        cert.s,
        cert.m,
        cert.claimed_value.slope,
        cert.claimed_value.intercept
    );
    tree_lines(&cert.trees, &cert.embeddings, &mut text);
    if let Some(r) = &cert.refutation {
        let red = r.red_avoids_g.map_or("unknown".to_string(), |b| b.to_string());
        writeln!(
            text,
            "refutation n {} order {} red {} blue {} red_avoids_g {red} no_blue_target {}",
            r.n, r.order, r.red_g6, r.blue_g6, r.no_blue_target
        )?;
        writeln!(text, "obstruction {}", r.obstruction)?;
    }
    for note in &cert.notes {
        writeln!(text, "note {note}")?;
    }
    Ok(Report { text, json: serde_json::to_value(&cert)? })
}

fn verdict_name(v: rgk::Verdict) -> String {
    serde_json::to_value(v).unwrap().as_str().unwrap().to_string()
}

fn run_coloring(args: ColoringArgs, budget: SearchBudget) -> anyhow::Result<Report> {
    let g = args.graph.as_deref().map(read_graph).transpose()?;
    let Some(tree) = args.tree else {
        let g = g.ok_or_else(|| anyhow::anyhow!("either --tree or --graph is required"))?;
        let h = require(args.h, "h")?;
        let profile = min_color_class(&g)?;
        let c = burr_coloring(&profile, h)?;
        let text = format!("kind burr\norder {}\nred {}\nblue {}\n", c.order(), c.red(), c.blue());
        let json =
            json!({ "kind": "burr", "order": c.order(), "coloring": c, "chi": profile.chi, "s": profile.s, "h": h });
        return Ok(Report { text, json });
    };
    let tree = read_graph(&tree)?;
    let params = NecessityParams::new(
        require(args.alpha, "alpha")?,
        require(args.p, "p")?,
        require(args.k, "k")?,
        require(args.n, "n")?,
        args.h.unwrap_or(1),
        tree,
    )?;
    let c = necessity_coloring(&params)?;
    let report = verify_no_blue_target_with_budget(&c, &params.target_parts(), budget)?;
    let red = g.as_ref().map(|g| red_avoids(&c, g, budget)).transpose()?;
    let mut text = format!(
        "kind necessity\ncase {}\norder {}\nt {} q {}\nred {}\nblue {}\nno_blue_target {}\nobstruction {}\n",
        params.case().number(),
        params.order(),
        params.t,
        params.q,
        c.red(),
        c.blue(),
        report.absent,
        report.explanation
    );
    if let Some((avoids, _)) = &red {
        writeln!(text, "red_avoids_g {avoids}")?;
    }
    let json = json!({
        "kind": "necessity",
        "case": params.case(),
        "order": params.order(),
        "alpha": params.alpha,
        "p": params.p,
        "k": params.k,
        "n": params.n,
        "h": params.h,
        "snd": params.snd,
        "t": params.t,
        "q": params.q,
        "tree": params.tree,
        "coloring": c,
        "no_blue_target": report.absent,
        "obstruction": report.explanation,
        "red_avoids_g": red.as_ref().map(|r| r.0),
        "red_witness": red.and_then(|r| r.1),
    });
    Ok(Report { text, json })
}

fn run_ramsey(graph: &str, pattern: &str, max: usize, n: Option<usize>) -> anyhow::Result<Report> {
    let (g, h) = (read_graph(graph)?, read_graph(pattern)?);
    if let Some(n) = n {
        let r = arrows(n, &g, &h)?;
        let mut text = format!("arrows {}\n", r.arrows);
        if let Some(c) = &r.counterexample {
            writeln!(text, "counterexample red {} blue {}", c.red(), c.blue())?;
        }
        return Ok(Report { text, json: serde_json::to_value(&r)? });
    }
    if max > MAX_ARROWING_ORDER {
        return Err(rgk::Error::AboveBound { order: max, bound: MAX_ARROWING_ORDER }.into());
    }
    let r = ramsey_number(&g, &h, max)?;
    let value = r.value.map_or("unknown".to_string(), |v| v.to_string());
    let text = format!(
        "value {value}\nlower_bound {}\nstatus {}\nwitness red {} blue {}\n",
        r.lower_bound,
        serde_json::to_value(r.status)?.as_str().unwrap(),
        r.lower_witness.red(),
        r.lower_witness.blue()
    );
    Ok(Report { text, json: serde_json::to_value(&r)? })
}

fn run(cli: Cli) -> anyhow::Result<Report> {
    let budget = cli.budget.map_or(SearchBudget::UNLIMITED, SearchBudget::nodes);
    match cli.command {
        Command::Snd { alpha } => run_snd(alpha),
        Command::Trees { n } => run_trees(n),
        Command::Invariants { graph, h } => run_invariants(&graph, h),
        Command::Embed { pattern, host } => run_embed(&pattern, &host, budget),
        Command::Goodness(args) => run_goodness(args, budget),
        Command::Coloring(args) => run_coloring(args, budget),
        Command::Ramsey { graph, pattern, max, n } => run_ramsey(&graph, &pattern, max, n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    }
    match run(cli) {
        Ok(report) => {
            if json_mode {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let budget = e.downcast_ref::<rgk::Error>().is_some_and(rgk::Error::is_budget);
            let kind = if budget { "budget_exceeded" } else { "invalid_input" };
            if json_mode {
                println!("{}", json!({ "error": kind, "message": format!("{e:#}") }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_INVALID })
        }
    }
}
