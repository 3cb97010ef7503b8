//! Command-line surface for the distlabel library.
//!
//! Exit codes are a stable contract: 0 success/valid/found, 1 verified
//! negative (invalid labeling, nonexistent sequence, exhausted search),
//! 2 usage or format error, 3 search budget exceeded.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use distlabel::sequences::DEFAULT_NODE_BUDGET;
use distlabel::*;

#[derive(Parser)]
#[command(
    name = "distlabel",
    version,
    about = "Skolem/Langford sequences, distance labelings, and distance-set realizations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a sequence of the given kind and order.
    SeqGen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        order: u32,
        /// Defect (Langford only; the Skolem kinds fix it at 1).
        #[arg(long, default_value_t = 1)]
        defect: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify a sequence against its kind's defining conditions.
    SeqVerify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        defect: u32,
        /// Comma-separated entries; read from stdin when omitted.
        seq: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generate a family graph.
    GraphGen {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build the constructive labeling of a family at its known length.
    LabelConstruct {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify a labeling of a graph against a length or a label set.
    LabelVerify {
        /// Graph JSON file, or `-` for stdin.
        #[arg(long)]
        graph: String,
        /// Comma-separated labels, vertex 0 first.
        #[arg(long)]
        labels: String,
        #[arg(long)]
        length: Option<u32>,
        #[arg(long)]
        set: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute the exact labeling length of a graph or family instance.
    LambdaSolve {
        #[command(flatten)]
        family: OptionalFamilyArgs,
        /// Graph JSON file, or `-` for stdin.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        l_max: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Look up the closed-form labeling length of a family instance.
    LambdaFormula {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Realize a labeled graph by one of the constructions.
    Realize {
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        /// Set values for the caterpillar construction, e.g. "1,2,4".
        #[arg(long)]
        set: Option<String>,
        /// Boundary gaps for the gap-set construction, e.g. "3" or "2,5".
        #[arg(long)]
        gaps: Option<String>,
        #[arg(long, default_value_t = 1)]
        d1: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Apply the necessary-condition filter to a candidate set.
    DeltaFilter {
        #[arg(long)]
        set: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exhaustively search for a realization up to a bounded order.
    DeltaSearch {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 7)]
        max_order: usize,
        #[arg(long, default_value_t = distlabel::delta::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Permit max order 8 (2^28 adjacency masks).
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Find the least degree of freedom under which a set realizes.
    DeltaFreedom {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 7)]
        max_order: usize,
        #[arg(long, default_value_t = distlabel::delta::DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Skolem,
    HookedSkolem,
    ExtendedSkolem,
    Langford,
}

impl KindArg {
    fn kind(self) -> SequenceKind {
        match self {
            KindArg::Skolem => SequenceKind::Skolem,
            KindArg::HookedSkolem => SequenceKind::HookedSkolem,
            KindArg::ExtendedSkolem => SequenceKind::ExtendedSkolem,
            KindArg::Langford => SequenceKind::Langford,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionArg {
    Regular,
    Dense2,
    Caterpillar,
    GapSet,
}

#[derive(Args)]
struct FamilyArgs {
    /// One of: path, cycle, complete, star, complete-bipartite, spider,
    /// wheel, fan, caterpillar.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Leaf counts along the caterpillar spine, e.g. "2,0,1".
    #[arg(long)]
    spine: Option<String>,
}

#[derive(Args)]
struct OptionalFamilyArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    spine: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Emit DOT (graph-bearing commands only); overridden by --json.
    #[arg(long)]
    dot: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

/// A command's outcome, carrying the exit-code semantics.
enum Outcome {
    /// Exit 0.
    Found(String),
    /// Exit 1: a completed computation with a negative verdict.
    Negative(String),
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Outcome::Found(payload)) => {
            print_payload(&payload);
            ExitCode::from(0)
        }
        Ok(Outcome::Negative(payload)) => {
            print_payload(&payload);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn print_payload(payload: &str) {
    if !payload.is_empty() {
        println!("{payload}");
    }
}

fn run(cmd: Cmd) -> Result<Outcome, CliError> {
    match cmd {
        Cmd::SeqGen {
            kind,
            order,
            defect,
            budget,
            out,
        } => seq_gen(kind, order, defect, budget, &out),
        Cmd::SeqVerify {
            kind,
            defect,
            seq,
            out,
        } => seq_verify(kind, defect, seq, &out),
        Cmd::GraphGen { family, out } => {
            let graph = family.spec()?.generate()?;
            let payload = render_graph(&graph, &out);
            Ok(Outcome::Found(emit(payload, &out)?))
        }
        Cmd::LabelConstruct { family, out } => label_construct(&family, &out),
        Cmd::LabelVerify {
            graph,
            labels,
            length,
            set,
            out,
        } => label_verify(&graph, &labels, length, set.as_deref(), &out),
        Cmd::LambdaSolve {
            family,
            graph,
            l_max,
            out,
        } => lambda_solve(&family, graph.as_deref(), l_max, &out),
        Cmd::LambdaFormula { family, out } => lambda_formula(&family, &out),
        Cmd::Realize {
            construction,
            l,
            r,
            set,
            gaps,
            d1,
            out,
        } => realize_cmd(
            construction,
            l,
            r,
            set.as_deref(),
            gaps.as_deref(),
            d1,
            &out,
        ),
        Cmd::DeltaFilter { set, out } => {
            let sigma = parse_set(&set)?;
            let verdict = delta_filter(&sigma);
            let payload = if out.json {
                format!(r#"{{"verdict":"{}"}}"#, verdict.name())
            } else {
                verdict.name().to_string()
            };
            let payload = emit(payload, &out)?;
            match verdict {
                FilterVerdict::Passes => Ok(Outcome::Found(payload)),
                _ => Ok(Outcome::Negative(payload)),
            }
        }
        Cmd::DeltaSearch {
            set,
            max_order,
            budget,
            allow_large,
            out,
        } => {
            let sigma = parse_set(&set)?;
            let opts = SearchOptions {
                max_order,
                allow_order_eight: allow_large,
                node_budget: budget,
            };
            match delta_search(&sigma, &opts)? {
                Some(cert) => {
                    let payload = emit(render_certificate(&cert, &out), &out)?;
                    Ok(Outcome::Found(payload))
                }
                None => {
                    let payload = if out.json {
                        format!(r#"{{"certificate":null,"exhausted_up_to":{max_order}}}"#)
                    } else {
                        format!("none (exhausted order <= {max_order})")
                    };
                    Ok(Outcome::Negative(emit(payload, &out)?))
                }
            }
        }
        Cmd::DeltaFreedom {
            set,
            max_order,
            budget,
            allow_large,
            out,
        } => {
            let sigma = parse_set(&set)?;
            let opts = SearchOptions {
                max_order,
                allow_order_eight: allow_large,
                node_budget: budget,
            };
            match delta_freedom(&sigma, &opts)? {
                Some(outcome) => {
                    let payload = if out.json {
                        format!(
                            r#"{{"freedom":{},"conclusive":{},"certificate":{}}}"#,
                            outcome.freedom,
                            outcome.conclusive,
                            outcome.certificate.to_json()
                        )
                    } else {
                        let caveat = if outcome.conclusive {
                            String::new()
                        } else {
                            format!(" (upper bound from order <= {max_order})")
                        };
                        format!(
                            "freedom={}{caveat}\n{}",
                            outcome.freedom,
                            render_certificate_text(&outcome.certificate)
                        )
                    };
                    Ok(Outcome::Found(emit(payload, &out)?))
                }
                None => {
                    let payload = if out.json {
                        format!(r#"{{"freedom":null,"exhausted_up_to":{max_order}}}"#)
                    } else {
                        format!("none (exhausted order <= {max_order})")
                    };
                    Ok(Outcome::Negative(emit(payload, &out)?))
                }
            }
        }
    }
}

fn seq_gen(
    kind: KindArg,
    order: u32,
    defect: u32,
    budget: u64,
    out: &OutputArgs,
) -> Result<Outcome, CliError> {
    if order == 0 {
        return Err(CliError::usage("--order must be at least 1"));
    }
    if defect == 0 {
        return Err(CliError::usage("--defect must be at least 1"));
    }
    if defect != 1 && !matches!(kind, KindArg::Langford) {
        return Err(CliError::usage(
            "only --kind langford takes a defect other than 1",
        ));
    }
    let found: Option<Sequence> = match kind {
        KindArg::ExtendedSkolem => Some(extended_skolem(order)),
        KindArg::HookedSkolem => generate_hooked_skolem(order, budget)?,
        KindArg::Langford => generate_langford(order, defect, budget)?,
        KindArg::Skolem => generate_langford(order, 1, budget)?
            .map(|s| Sequence::new(SequenceKind::Skolem, 1, s.entries().to_vec()).unwrap()),
    };
    match found {
        Some(s) => {
            let payload = if out.json {
                serde_json::to_string(&s).unwrap()
            } else {
                s.to_csv()
            };
            Ok(Outcome::Found(emit(payload, out)?))
        }
        None => {
            let payload = if out.json {
                let reason = match kind.kind() {
                    SequenceKind::HookedSkolem => "search exhausted".to_string(),
                    _ => langford_exists(order, defect).reason,
                };
                format!(r#"{{"sequence":null,"reason":"{reason}"}}"#)
            } else {
                "none".to_string()
            };
            Ok(Outcome::Negative(emit(payload, out)?))
        }
    }
}

fn seq_verify(
    kind: KindArg,
    defect: u32,
    seq: Option<String>,
    out: &OutputArgs,
) -> Result<Outcome, CliError> {
    let text = match seq {
        Some(text) => text,
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
            buffer
        }
    };
    let entries = parse_u32_list(text.trim())?;
    let sequence = Sequence::new(kind.kind(), defect, entries)?;
    let report = verify_sequence(&sequence);
    let payload = if out.json {
        serde_json::to_string(&report).unwrap()
    } else if report.valid {
        "valid".to_string()
    } else {
        format!("invalid: {}", report.violation.clone().unwrap_or_default())
    };
    let payload = emit(payload, out)?;
    if report.valid {
        Ok(Outcome::Found(payload))
    } else {
        Ok(Outcome::Negative(payload))
    }
}

fn label_construct(family: &FamilyArgs, out: &OutputArgs) -> Result<Outcome, CliError> {
    let spec = family.spec()?;
    let built = construct_family_labeling(&spec)?;
    let payload = if out.json {
        serde_json::to_string(&built).unwrap()
    } else if out.dot {
        built.graph.to_dot(Some(&built.labeling))
    } else {
        format!(
            "family={} order={} length={} route={}\nlabels: {}",
            spec.name(),
            built.graph.order(),
            built.length,
            match built.route {
                ConstructionRoute::Pattern => "pattern",
                ConstructionRoute::Search => "search",
            },
            csv(built.labeling.labels())
        )
    };
    Ok(Outcome::Found(emit(payload, out)?))
}

fn label_verify(
    graph: &str,
    labels: &str,
    length: Option<u32>,
    set: Option<&str>,
    out: &OutputArgs,
) -> Result<Outcome, CliError> {
    let graph = read_graph(graph)?;
    let labeling = Labeling::new(parse_u32_list(labels)?);
    let kind = match (length, set) {
        (Some(l), None) => LabelSetKind::Length(l),
        (None, Some(s)) => LabelSetKind::Set(parse_set(s)?),
        _ => {
            return Err(CliError::usage("pass exactly one of --length or --set"));
        }
    };
    let report = verify_labeling(&graph, &labeling, &kind)?;
    let payload = if out.json {
        serde_json::to_string(&report).unwrap()
    } else if report.valid {
        format!(
            "valid proper={} regular_degree={} image={}",
            report.proper,
            report
                .regular_degree
                .map_or("none".to_string(), |r| r.to_string()),
            csv(&report.surjective_onto)
        )
    } else {
        format!(
            "invalid: {}",
            report.first_violation.clone().unwrap_or_default()
        )
    };
    let payload = emit(payload, out)?;
    if report.valid {
        Ok(Outcome::Found(payload))
    } else {
        Ok(Outcome::Negative(payload))
    }
}

fn lambda_solve(
    family: &OptionalFamilyArgs,
    graph: Option<&str>,
    l_max: Option<u32>,
    out: &OutputArgs,
) -> Result<Outcome, CliError> {
    let graph = match (family.family.as_deref(), graph) {
        (Some(_), None) => family.spec()?.generate()?,
        (None, Some(path)) => read_graph(path)?,
        _ => {
            return Err(CliError::usage("pass exactly one of --family or --graph"));
        }
    };
    match lambda_exact(&graph, l_max) {
        Ok(lambda) => {
            let payload = if out.json {
                format!(r#"{{"lambda":{lambda}}}"#)
            } else {
                lambda.to_string()
            };
            Ok(Outcome::Found(emit(payload, out)?))
        }
        Err(Error::LengthBoundExceeded { l_max }) => {
            let payload = if out.json {
                format!(r#"{{"lambda":null,"l_max":{l_max}}}"#)
            } else {
                format!("none (no labeling of length at most {l_max})")
            };
            Ok(Outcome::Negative(emit(payload, out)?))
        }
        Err(e) => Err(e.into()),
    }
}

fn lambda_formula(family: &FamilyArgs, out: &OutputArgs) -> Result<Outcome, CliError> {
    let spec = family.spec()?;
    match lambda_closed_form(&spec) {
        Some(lambda) => {
            let payload = if out.json {
                format!(r#"{{"lambda":{lambda}}}"#)
            } else {
                lambda.to_string()
            };
            Ok(Outcome::Found(emit(payload, out)?))
        }
        None => {
            let payload = if out.json {
                r#"{"lambda":null}"#.to_string()
            } else {
                "none".to_string()
            };
            Ok(Outcome::Negative(emit(payload, out)?))
        }
    }
}

fn realize_cmd(
    construction: ConstructionArg,
    l: Option<u32>,
    r: Option<u32>,
    set: Option<&str>,
    gaps: Option<&str>,
    d1: u32,
    out: &OutputArgs,
) -> Result<Outcome, CliError> {
    let cert = match construction {
        ConstructionArg::Regular => {
            let l = l.ok_or_else(|| CliError::usage("--construction regular needs --l"))?;
            let r = r.ok_or_else(|| CliError::usage("--construction regular needs --r"))?;
            realize_regular(l, r)?
        }
        ConstructionArg::Dense2 => {
            let l = l.ok_or_else(|| CliError::usage("--construction dense2 needs --l"))?;
            realize_dense_degree2(l)?
        }
        ConstructionArg::Caterpillar => {
            let set =
                set.ok_or_else(|| CliError::usage("--construction caterpillar needs --set"))?;
            realize_caterpillar(&parse_set(set)?)?
        }
        ConstructionArg::GapSet => {
            let gaps = match gaps {
                Some(text) => parse_u32_list(text)?,
                None => Vec::new(),
            };
            realize_gap_set(&gaps, d1)?
        }
    };
    Ok(Outcome::Found(emit(render_certificate(&cert, out), out)?))
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, CliError> {
        family_spec(&self.family, self.n, self.m, self.k, self.spine.as_deref())
    }
}

impl OptionalFamilyArgs {
    fn spec(&self) -> Result<FamilySpec, CliError> {
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| CliError::usage("missing --family"))?;
        family_spec(family, self.n, self.m, self.k, self.spine.as_deref())
    }
}

fn family_spec(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    spine: Option<&str>,
) -> Result<FamilySpec, CliError> {
    let need_n = || n.ok_or_else(|| CliError::usage(format!("--family {family} needs --n")));
    let need_m = || m.ok_or_else(|| CliError::usage(format!("--family {family} needs --m")));
    let need_k = || k.ok_or_else(|| CliError::usage(format!("--family {family} needs --k")));
    let spec = match family {
        "path" => FamilySpec::Path { n: need_n()? },
        "cycle" => FamilySpec::Cycle { n: need_n()? },
        "complete" => FamilySpec::Complete { n: need_n()? },
        "star" => FamilySpec::Star { k: need_k()? },
        "complete-bipartite" | "complete_bipartite" => FamilySpec::CompleteBipartite {
            m: need_m()?,
            n: need_n()?,
        },
        "spider" => FamilySpec::Spider {
            k: need_k()?,
            n: need_n()?,
        },
        "wheel" => FamilySpec::Wheel { n: need_n()? },
        "fan" => FamilySpec::Fan { n: need_n()? },
        "caterpillar" => {
            let spine =
                spine.ok_or_else(|| CliError::usage("--family caterpillar needs --spine"))?;
            let leaves = parse_u32_list(spine)?
                .into_iter()
                .map(|v| v as usize)
                .collect();
            FamilySpec::Caterpillar { leaves }
        }
        other => {
            return Err(CliError::usage(format!("unknown family {other:?}")));
        }
    };
    Ok(spec)
}

fn parse_u32_list(text: &str) -> Result<Vec<u32>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| CliError::usage(format!("not a nonnegative integer: {part:?}")))
        })
        .collect()
}

fn parse_set(text: &str) -> Result<DeltaSet, CliError> {
    Ok(DeltaSet::new(parse_u32_list(text)?)?)
}

fn read_graph(path: &str) -> Result<Graph, CliError> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
        buffer
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("reading {path}: {e}")))?
    };
    Ok(Graph::from_json(&text)?)
}

fn render_graph(graph: &Graph, out: &OutputArgs) -> String {
    if out.json {
        graph.to_json()
    } else if out.dot {
        graph.to_dot(None)
    } else {
        let edges = graph
            .edges()
            .iter()
            .map(|&(u, v)| format!("({u},{v})"))
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "order={} size={}\nedges: {edges}",
            graph.order(),
            graph.size()
        )
    }
}

fn render_certificate(cert: &RealizationCertificate, out: &OutputArgs) -> String {
    if out.json {
        cert.to_json()
    } else if out.dot {
        cert.to_dot()
    } else {
        render_certificate_text(cert)
    }
}

fn render_certificate_text(cert: &RealizationCertificate) -> String {
    format!(
        "construction={} order={} size={} sigma={} regular_degree={}\nlabels: {}",
        cert.construction.name(),
        cert.graph.order(),
        cert.graph.size(),
        csv(cert.sigma.values()),
        cert.regular_degree
            .map_or("none".to_string(), |r| r.to_string()),
        csv(cert.labeling.labels())
    )
}

fn csv(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Routes the payload to --out when given; the caller prints otherwise.
fn emit(payload: String, out: &OutputArgs) -> Result<String, CliError> {
    match &out.out {
        Some(path) => {
            let mut content = payload;
            if !content.ends_with('\n') {
                content.push('\n');
            }
            fs::write(path, content)
                .map_err(|e| CliError::usage(format!("writing {path}: {e}")))?;
            Ok(String::new())
        }
        None => Ok(payload),
    }
}
