//! Batch front-end for the binomial edge ideal toolkit.
//!
//! [`run`] takes the argument vector and returns the report text with the
//! exit code: 0 on success, 2 when two computations that must agree do not,
//! 1 on usage, input or unsupported-shape errors.

pub mod graphfile;
mod report;

use std::path::PathBuf;

use bei_core::aci::{aci_edge_d_sequence, classify, AciStatus, Shape};
use bei_core::beideal::{binomial_edge_ideal, edge_binomial, f_edge, fm_colon};
use bei_core::betti::{closed_form_beta2, default_degree_cap, oracle_beta_squarefree, BettiTable};
use bei_core::graph::enumerate::{trees, unicyclic};
use bei_core::graph::families::{
    bipartite_eight, chorded_path_end, chorded_path_inner, cycle, path, star,
};
use bei_core::graph::Graph;
use bei_core::groebner::{colon, ideal_equal, initial_ideal, Ideal, Options};
use bei_core::poly::{parse_polynomial, MonomialOrder, Polynomial};
use bei_core::rees::{
    defining_ideal_by_elimination, delta_kernel_check, is_linear_type, non_linear_type_witness,
    rees_linear_part, symmetric_universe, QUADRATIC_ELEMENT, QUADRATIC_ELEMENT_ALT_SIGNS,
};
use bei_core::syzygy::{first_syzygy, verify_first_syzygy};
use bei_core::{beideal::admissible_initial, Error, Field, Fp, Q};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "bei", about = "Invariants of binomial edge ideals")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    #[arg(long, value_enum, default_value_t = FieldChoice::Fp32003, global = true)]
    field: FieldChoice,
    #[arg(long, value_enum, default_value_t = OrderChoice::Lex, global = true)]
    order: OrderChoice,
    /// Largest internal degree the resolution oracle explores.
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FieldChoice {
    Q,
    Fp32003,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OrderChoice {
    Lex,
    Grevlex,
}

impl OrderChoice {
    fn order(self) -> MonomialOrder {
        match self {
            OrderChoice::Lex => MonomialOrder::lex(),
            OrderChoice::Grevlex => MonomialOrder::grevlex(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form second Betti row, optionally checked against the oracle.
    Betti {
        graph: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Minimal first syzygies from the closed-form generators.
    Syzygy {
        graph: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Complete intersection / almost complete intersection verdict.
    Classify {
        graph: PathBuf,
        #[arg(long)]
        check_mu: bool,
    },
    /// Edge-binomial d-sequence for an ACI graph.
    Dseq { graph: PathBuf },
    /// Rees algebra presentation.
    Rees {
        graph: PathBuf,
        #[arg(long)]
        linear_gens: bool,
        #[arg(long)]
        eliminate: bool,
        #[arg(long)]
        linear_type: bool,
    },
    /// Reduced Gröbner basis of J_G, or its initial ideal.
    Groebner {
        graph: PathBuf,
        #[arg(long)]
        initial: bool,
    },
    /// Agreement checks over all trees and unicyclic graphs up to `max_n`.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

type Outcome = Result<(Report, i32), Error>;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (e.to_string(), code);
        }
    };
    let result = match cli.global.field {
        FieldChoice::Q => execute::<Q>(&cli.command, &cli.global),
        FieldChoice::Fp32003 => execute::<Fp>(&cli.command, &cli.global),
    };
    match result {
        Ok((r, code)) => (r.finish(), code),
        Err(e) => (format!("error: {e}\n"), 1),
    }
}

fn load(path: &PathBuf) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    graphfile::parse(&text)
}

fn header<F: Field>(command: &str, g: Option<&Graph>) -> Report {
    let mut r = Report::new();
    r.kv("command", command);
    r.kv("field", F::NAME);
    if let Some(g) = g {
        r.kv("graph", graph_summary(g));
    }
    r
}

fn graph_summary(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
    format!("n={} edges={}", g.n(), edges.join(" "))
}

fn execute<F: Field>(command: &Command, global: &Global) -> Outcome {
    match command {
        Command::Betti { graph, oracle } => betti::<F>(&load(graph)?, *oracle, global),
        Command::Syzygy { graph, verify } => syzygy::<F>(&load(graph)?, *verify),
        Command::Classify { graph, check_mu } => classify_cmd::<F>(&load(graph)?, *check_mu),
        Command::Dseq { graph } => dseq::<F>(&load(graph)?),
        Command::Rees {
            graph,
            linear_gens,
            eliminate,
            linear_type,
        } => rees::<F>(
            &load(graph)?,
            *linear_gens,
            *eliminate,
            *linear_type,
            global,
        ),
        Command::Groebner { graph, initial } => groebner::<F>(&load(graph)?, *initial, global),
        Command::Sweep { max_n } => sweep::<F>(*max_n, global),
    }
}

fn table_lines(r: &mut Report, t: &BettiTable) {
    for ((i, j), c) in t.entries() {
        r.kv(&format!("beta[{i},{j}]"), c);
    }
}

fn betti<F: Field>(g: &Graph, oracle: bool, global: &Global) -> Outcome {
    let mut r = header::<F>("betti", Some(g));
    let closed = closed_form_beta2(g);
    r.section("closed_form");
    match &closed {
        Ok(t) => {
            r.kv("origin", t.origin(2).unwrap_or("-"));
            table_lines(&mut r, t);
        }
        Err(e) => r.kv("unavailable", e),
    }
    r.end();
    if !oracle {
        return Ok((r, 0));
    }
    let cap = global
        .degree_bound
        .unwrap_or_else(|| default_degree_cap(g.n()));
    let t = oracle_beta_squarefree(&binomial_edge_ideal::<F>(g), 2, cap)?;
    r.section("oracle");
    r.kv("degree_bound", cap);
    table_lines(&mut r, &t);
    r.end();
    let code = match &closed {
        Ok(c) => {
            let agree = c.row(2) == t.row(2);
            r.kv("agreement", agree);
            if agree {
                0
            } else {
                2
            }
        }
        Err(_) => 0,
    };
    Ok((r, code))
}

fn syzygy<F: Field>(g: &Graph, verify: bool) -> Outcome {
    let mut r = header::<F>("syzygy", Some(g));
    let gens = first_syzygy::<F>(g)?;
    r.kv("count", gens.len());
    r.section("generators");
    for s in &gens {
        r.line(s.to_string());
    }
    r.end();
    if !verify {
        return Ok((r, 0));
    }
    let rep = verify_first_syzygy(g, &gens)?;
    r.section("verification");
    for l in rep.to_string().lines() {
        r.line(l.replace(" = ", ": "));
    }
    r.end();
    r.kv("passed", rep.passed());
    Ok((r, if rep.passed() { 0 } else { 2 }))
}

fn classify_cmd<F: Field>(g: &Graph, check_mu: bool) -> Outcome {
    let mut r = header::<F>("classify", Some(g));
    let v = classify(g)?;
    r.kv("status", v.status);
    r.kv("shape", v.shape);
    r.kv("witness", &v.witness);
    r.kv("mu", v.mu);
    r.kv("height", v.height);
    if !check_mu {
        return Ok((r, 0));
    }
    r.kv("arithmetic_status", v.arithmetic_status);
    r.kv("agreement", v.agrees());
    Ok((r, if v.agrees() { 0 } else { 2 }))
}

fn dseq<F: Field>(g: &Graph) -> Outcome {
    let mut r = header::<F>("dseq", Some(g));
    let v = classify(g)?;
    r.kv("status", v.status);
    r.kv("shape", v.shape);
    let d = aci_edge_d_sequence::<F>(g, &v)?;
    r.section("sequence");
    for p in &d.elements {
        r.line(p.to_string());
    }
    r.end();
    r.kv("colon_checks", d.certificate.len());
    r.kv("d_sequence", true);
    Ok((r, 0))
}

fn rees<F: Field>(
    g: &Graph,
    linear_gens: bool,
    eliminate: bool,
    linear_type: bool,
    global: &Global,
) -> Outcome {
    let mut r = header::<F>("rees", Some(g));
    let all = !(linear_gens || eliminate || linear_type);
    let opts = Options::default();
    if linear_gens || all {
        let cap = global.degree_bound.unwrap_or(2 * g.n() as u32);
        let gens = rees_linear_part::<F>(g, cap)?;
        r.kv("linear_generators", gens.len());
        r.section("linear");
        for p in &gens {
            r.line(p.to_string());
        }
        r.end();
    }
    if eliminate || all {
        let k = defining_ideal_by_elimination::<F>(g, &opts)?;
        r.kv("kernel_generators", k.gens().len());
        r.section("kernel");
        for p in k.gens() {
            r.line(p.to_string());
        }
        r.end();
    }
    let mut code = 0;
    if linear_type || all {
        let c = is_linear_type::<F>(g, &opts)?;
        r.kv("linear_type", c.linear_type);
        r.kv("kernel_degree", c.kernel_degree);
        if let Some(eq) = c.gb_equal {
            r.kv("gb_equal", eq);
            if eq != c.linear_type {
                code = 2;
            }
        }
        if let Some(w) = &c.witness {
            r.kv("witness", w);
        }
        if *g == bipartite_eight() {
            let uni = symmetric_universe(g);
            let q: Polynomial<F> = parse_polynomial(&uni, QUADRATIC_ELEMENT)?;
            let w = non_linear_type_witness(g, &q)?;
            let alt: Polynomial<F> = parse_polynomial(&uni, QUADRATIC_ELEMENT_ALT_SIGNS)?;
            r.section("quadratic_element");
            r.kv("element", &q);
            r.kv("in_kernel", w.in_kernel);
            r.kv("in_linear_ideal", w.in_linear_ideal);
            r.kv("alt_sign_variant_in_kernel", delta_kernel_check(&alt)?);
            r.end();
            if w.shows_non_linear_type() == c.linear_type {
                code = 2;
            }
        }
    }
    Ok((r, code))
}

fn groebner<F: Field>(g: &Graph, initial: bool, global: &Global) -> Outcome {
    let mut r = header::<F>("groebner", Some(g));
    let order = global.order.order();
    r.kv("order", format!("{:?}", global.order).to_lowercase());
    let j = binomial_edge_ideal::<F>(g);
    if initial {
        let ini = initial_ideal(&j, &order);
        r.kv("count", ini.gens().len());
        r.section("initial_ideal");
        for p in ini.gens() {
            r.line(p.to_string());
        }
    } else {
        let gb = j.gb(&order);
        r.kv("count", gb.len());
        r.section("basis");
        for p in gb.polynomials() {
            r.line(p.to_string());
        }
    }
    r.end();
    Ok((r, 0))
}

struct Tally {
    ran: usize,
    failed: Vec<String>,
}

impl Tally {
    fn record(&mut self, what: String, ok: Result<bool, Error>) -> &'static str {
        self.ran += 1;
        match ok {
            Ok(true) => "ok",
            Ok(false) => {
                self.failed.push(what);
                "FAIL"
            }
            Err(e) => {
                self.failed.push(format!("{what}: {e}"));
                "ERROR"
            }
        }
    }
}

fn sweep<F: Field>(max_n: usize, global: &Global) -> Outcome {
    let mut r = header::<F>("sweep", None);
    r.kv("max_n", max_n);
    r.kv("seed", global.seed);
    let mut tally = Tally {
        ran: 0,
        failed: Vec::new(),
    };
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 3..=max_n {
        graphs.extend(trees(n));
        graphs.extend(unicyclic(n));
    }
    r.section("graphs");
    for g in &graphs {
        let name = graph_summary(g);
        let cap = global
            .degree_bound
            .unwrap_or_else(|| default_degree_cap(g.n()));
        let betti = tally.record(
            format!("betti {name}"),
            (|| {
                Ok(closed_form_beta2(g)?.row(2)
                    == oracle_beta_squarefree(&binomial_edge_ideal::<F>(g), 2, cap)?.row(2))
            })(),
        );
        let syz = tally.record(
            format!("syzygy {name}"),
            (|| Ok(verify_first_syzygy(g, &first_syzygy::<F>(g)?)?.passed()))(),
        );
        let v = classify(g);
        let cls = tally.record(
            format!("classify {name}"),
            v.as_ref().map(|v| v.agrees()).map_err(Clone::clone),
        );
        let colon_ok = tally.record(format!("colon {name}"), colon_formula::<F>(g));
        let dseq = match &v {
            Ok(v) if v.status == AciStatus::Aci && v.shape != Shape::TriangleWithPaths => tally
                .record(
                    format!("dseq {name}"),
                    aci_edge_d_sequence::<F>(g, v).map(|_| true),
                ),
            _ => "skip",
        };
        r.line(format!(
            "{name}: betti={betti} syzygy={syz} classify={cls} colon={colon_ok} dseq={dseq}"
        ));
    }
    r.end();

    r.section("families");
    for n in 5..=max_n {
        for (label, g) in [
            ("inner", chorded_path_inner(n)),
            ("end", chorded_path_end(n)),
        ] {
            let ok = tally.record(
                format!("initial {label} {n}"),
                (|| {
                    let j = binomial_edge_ideal::<F>(&g);
                    Ok(ideal_equal(
                        &admissible_initial::<F>(&g)?,
                        &initial_ideal(&j, &MonomialOrder::lex()),
                        &MonomialOrder::lex(),
                    ))
                })(),
            );
            r.line(format!(
                "admissible initial ideal, chord {label}, n={n}: {ok}"
            ));
        }
    }
    for n in 2..=max_n.min(5) {
        let mut family = vec![("path", path(n)), ("star", star(n - 1))];
        if n >= 3 {
            family.insert(1, ("cycle", cycle(n)));
        }
        for (label, g) in family {
            let ok = tally.record(
                format!("linear type {label} {n}"),
                is_linear_type::<F>(&g, &Options::default())
                    .map(|c| c.linear_type && c.gb_equal == Some(true)),
            );
            r.line(format!("linear type, {label} on {n} vertices: {ok}"));
        }
    }
    r.end();

    r.section("radicality");
    let mut rng = ChaCha8Rng::seed_from_u64(global.seed);
    for _ in 0..5 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let n = g.n();
        let uni = bei_core::poly::VarUniverse::standard(n);
        let mut f = Polynomial::<F>::one(&uni);
        let mut factors = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let i = rng.gen_range(1..n);
            let j = rng.gen_range(i + 1..=n);
            f = &f * &edge_binomial(&uni, i, j)?;
            factors.push(format!("f{{{i},{j}}}"));
        }
        let name = format!("{} f={}", graph_summary(g), factors.join("*"));
        let ok = tally.record(
            format!("radical {name}"),
            (|| {
                let j = binomial_edge_ideal::<F>(g);
                Ok(ideal_equal(
                    &colon(&j, &f)?,
                    &colon(&j, &(&f * &f))?,
                    &MonomialOrder::grevlex(),
                ))
            })(),
        );
        r.line(format!("{name}: {ok}"));
    }
    r.end();

    r.kv("checks", tally.ran);
    r.kv("failures", tally.failed.len());
    for f in &tally.failed {
        r.kv("failed", f);
    }
    Ok((r, if tally.failed.is_empty() { 0 } else { 2 }))
}

fn colon_formula<F: Field>(g: &Graph) -> Result<bool, Error> {
    for &e in g.edges() {
        let h = g.without_edge(e);
        let j: Ideal<F> = binomial_edge_ideal(&h);
        let lhs = colon(&j, &f_edge(j.universe(), e))?;
        if !ideal_equal(&lhs, &fm_colon::<F>(g, e)?, &MonomialOrder::grevlex()) {
            return Ok(false);
        }
    }
    Ok(true)
}
