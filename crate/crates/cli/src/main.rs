use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pseudoshape::asymptotics::{self, growth_record, growth_table, AsymptoticsError, EquationId, InnerEquation, TableId};
use pseudoshape::count::g_one_arcs_from;
use pseudoshape::enumerate::{
    count_family, cumulative_shape_census, enumerate_family, shape_census_capped, CountFilter, EnumError, EnumSpec,
    Family, DEFAULT_CAP,
};
use pseudoshape::series::{dump, matching_route, matching_routes, GfRegistry, GfRequest, SeriesError};
use pseudoshape::verify::{self, Suite, Tolerances};
use pseudoshape::{parse_diagram, Diagram, DiagramError, ShapeLevel, StructureParams};

mod error;
use error::CliError;

const UNIVARIATE_ORDER: usize = 40;
const BIVARIATE_ORDER: usize = 24;

#[derive(Parser)]
#[command(name = "pseudoshape", version, about = "Enumeration, generating functions and growth rates of k-noncrossing RNA structures and shapes")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    sigma: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<StructureParams, CliError> {
        StructureParams::new(self.k, self.sigma).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every member of a diagram family on n vertices.
    Enumerate {
        #[arg(long, default_value = "structures")]
        family: String,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Number of distinct shapes induced by structures of length 0..=n.
    Census {
        #[arg(long, default_value_t = 5)]
        level: u8,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Count shapes induced by structures of length at most n.
        #[arg(long)]
        cumulative: bool,
        /// List the shapes for length n instead of counting.
        #[arg(long)]
        list: bool,
    },
    /// Brute-force count of a family on n vertices.
    Count {
        #[arg(long, default_value = "structures")]
        family: String,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        arcs: Option<usize>,
        #[arg(long)]
        one_arcs: Option<usize>,
        #[arg(long)]
        isolated: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// k-noncrossing perfect matchings f_k(2n) for n <= order.
    Matchings {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = UNIVARIATE_ORDER)]
        order: usize,
        #[arg(long, default_value = "chamber-walk")]
        route: String,
        /// Split each count by number of 1-arcs.
        #[arg(long)]
        one_arcs: bool,
    },
    /// Coefficients of a named generating function.
    Series {
        #[arg(long)]
        which: String,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Shape of a structure given as arc-list text, a file, or '-' for stdin.
    Shape {
        input: String,
        #[arg(long, default_value_t = 5)]
        level: u8,
        #[command(flatten)]
        p: ParamArgs,
    },
    /// Minimal positive root of one singularity equation.
    Growth {
        #[arg(long)]
        equation: String,
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 5)]
        digits: usize,
    },
    /// Growth-rate tables over k = 2..8.
    Tables {
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long, default_value_t = 5)]
        digits: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

struct Output {
    command: &'static str,
    params: Value,
    text: String,
    payload: Value,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.text.clone(),
            Format::Json => {
                let envelope = json!({
                    "version": env!("CARGO_PKG_VERSION"),
                    "command": self.command,
                    "params": self.params,
                    "payload": self.payload,
                });
                format!("{}\n", serde_json::to_string_pretty(&envelope).expect("serializable"))
            }
        }
    }
}

fn family(name: &str) -> Result<Family, CliError> {
    Family::from_name(name).ok_or_else(|| CliError::Usage(format!("unknown family '{name}'")))
}

fn level(n: u8) -> Result<ShapeLevel, CliError> {
    ShapeLevel::from_number(n).ok_or_else(|| CliError::Usage(format!("unknown shape level {n} (expected 1 or 5)")))
}

fn cap_error(e: EnumError) -> CliError {
    CliError::Usage(e.to_string())
}

fn cmd_enumerate(name: &str, p: ParamArgs, n: usize, cap: usize) -> Result<Output, CliError> {
    let spec = EnumSpec::new(family(name)?, n, p.params()?).with_cap(cap);
    let diagrams = enumerate_family(&spec).map_err(cap_error)?;
    let mut text = String::from("diagram\n");
    for d in &diagrams {
        writeln!(text, "{d}").unwrap();
    }
    Ok(Output {
        command: "enumerate",
        params: json!({"family": spec.family.name(), "k": p.k, "sigma": p.sigma, "n": n, "cap": cap}),
        text,
        payload: json!({
            "count": diagrams.len().to_string(),
            "diagrams": diagrams.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        }),
    })
}

fn cmd_census(lv: u8, p: ParamArgs, n: usize, cap: usize, cumulative: bool, list: bool) -> Result<Output, CliError> {
    let level = level(lv)?;
    let params = p.params()?;
    if n > cap {
        return Err(cap_error(EnumError::CapExceeded { n, cap }));
    }
    let echo = json!({"level": lv, "k": p.k, "sigma": p.sigma, "n": n, "cap": cap, "cumulative": cumulative});
    let census = |len| {
        if cumulative {
            cumulative_shape_census(len, params, level)
        } else {
            shape_census_capped(len, params, level, cap)
        }
        .map_err(cap_error)
    };
    if list {
        let c = census(n)?;
        let mut text = String::from("shape\n");
        for s in &c.shapes {
            writeln!(text, "{s}").unwrap();
        }
        return Ok(Output {
            command: "census",
            params: echo,
            text,
            payload: json!({"count": c.count().to_string(), "shapes": c.shapes}),
        });
    }
    let counts = (0..=n).map(|len| census(len).map(|c| c.count())).collect::<Result<Vec<_>, _>>()?;
    let mut text = String::from("n\tcount\n");
    for (len, c) in counts.iter().enumerate() {
        writeln!(text, "{len}\t{c}").unwrap();
    }
    Ok(Output {
        command: "census",
        params: echo,
        text,
        payload: json!(counts.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_count(
    name: &str,
    p: ParamArgs,
    n: usize,
    arcs: Option<usize>,
    one_arcs: Option<usize>,
    isolated: Option<usize>,
    cap: usize,
) -> Result<Output, CliError> {
    let spec = EnumSpec::new(family(name)?, n, p.params()?).with_cap(cap);
    let filter = CountFilter { arcs, one_arcs, isolated };
    let count = count_family(&spec, filter).map_err(cap_error)?;
    Ok(Output {
        command: "count",
        params: json!({
            "family": spec.family.name(), "k": p.k, "sigma": p.sigma, "n": n,
            "arcs": arcs, "one_arcs": one_arcs, "isolated": isolated, "cap": cap,
        }),
        text: format!("family\tn\tcount\n{}\t{n}\t{count}\n", spec.family.name()),
        payload: json!({"count": count.to_string()}),
    })
}

fn cmd_matchings(k: usize, order: usize, route: &str, one_arcs: bool) -> Result<Output, CliError> {
    if k < 2 {
        return Err(CliError::Usage(format!("k = {k} must be at least 2")));
    }
    let r = matching_route(route).ok_or_else(|| {
        let names: Vec<_> = matching_routes().iter().map(|r| r.name()).collect();
        CliError::Usage(format!("unknown route '{route}' (known: {})", names.join(", ")))
    })?;
    let counts = r.counts(k, order).map_err(series_error)?;
    let params = json!({"k": k, "order": order, "route": r.name(), "one_arcs": one_arcs});
    if one_arcs {
        let g = g_one_arcs_from(&counts);
        return Ok(Output {
            command: "matchings",
            params,
            text: dump::bivariate_tsv(&g.rows),
            payload: dump::bivariate_json(&g.rows),
        });
    }
    Ok(Output {
        command: "matchings",
        params,
        text: dump::univariate_tsv(&counts.values),
        payload: dump::univariate_json(&counts.values),
    })
}

fn series_error(e: SeriesError) -> CliError {
    match e {
        SeriesError::UnknownName(_) | SeriesError::InvalidParameters(_) => CliError::Usage(e.to_string()),
        _ => CliError::Failure(e.to_string()),
    }
}

fn cmd_series(which: &str, p: ParamArgs, order: Option<usize>) -> Result<Output, CliError> {
    p.params()?;
    let registry = GfRegistry::standard();
    let gf = registry.get(which).map_err(|_| {
        CliError::Usage(format!("unknown generating function '{which}' (known: {})", registry.names().join(", ")))
    })?;
    let order = order.unwrap_or(if gf.is_bivariate() { BIVARIATE_ORDER } else { UNIVARIATE_ORDER });
    let req = GfRequest { k: p.k, sigma: p.sigma, order };
    let value = gf.evaluate(&req).map_err(series_error)?;
    Ok(Output {
        command: "series",
        params: json!({"which": gf.name(), "k": p.k, "sigma": p.sigma, "order": order}),
        text: dump::tsv(&value),
        payload: dump::json(&value),
    })
}

fn read_input(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    let path = std::path::Path::new(input);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {input}: {e}")));
    }
    Ok(input.to_string())
}

fn parse_error(e: DiagramError) -> CliError {
    CliError::Usage(format!("parse error: {e}"))
}

fn cmd_shape(input: &str, lv: u8, p: ParamArgs, verbose: bool) -> Result<Output, CliError> {
    let level = level(lv)?;
    let params = p.params()?;
    let text_in = read_input(input)?;
    let d: Diagram = parse_diagram(text_in.trim()).map_err(parse_error)?;
    let shape = d.shape(level, params).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut text = format!("{shape}\n");
    let crossing = d.crossing_number();
    let stacks: Vec<Value> = d
        .stacks()
        .iter()
        .map(|s| json!({"outer": [s.outer.0, s.outer.1], "size": s.size}))
        .collect();
    if verbose {
        writeln!(text, "{}-noncrossing: {} (crossing number {crossing})", p.k, d.is_k_noncrossing(p.k)).unwrap();
        for s in d.stacks() {
            writeln!(text, "stack ({},{}) size {}", s.outer.0, s.outer.1, s.size).unwrap();
        }
    }
    Ok(Output {
        command: "shape",
        params: json!({"level": lv, "k": p.k, "sigma": p.sigma}),
        text,
        payload: json!({
            "input": d.to_string(),
            "shape": shape.to_string(),
            "crossing_number": crossing,
            "stacks": stacks,
        }),
    })
}

fn asymptotics_error(e: AsymptoticsError) -> CliError {
    match e {
        AsymptoticsError::UnknownName { .. } | AsymptoticsError::InvalidParameters(_) => CliError::Usage(e.to_string()),
        _ => CliError::Failure(e.to_string()),
    }
}

fn cmd_growth(equation: &str, p: ParamArgs, digits: usize) -> Result<Output, CliError> {
    let id = EquationId::from_name(equation).ok_or_else(|| {
        let names: Vec<_> = EquationId::ALL.iter().map(|e| e.name()).collect();
        CliError::Usage(format!("unknown equation '{equation}' (known: {})", names.join(", ")))
    })?;
    let eq = InnerEquation::new(id, p.k, p.sigma).map_err(asymptotics_error)?;
    let rec = growth_record(eq, &asymptotics::default_tolerance(), digits).map_err(asymptotics_error)?;
    let text = format!(
        "equation\tk\tsigma\troot\tinverse_rate\tsubexp\tcertified\n{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
        id, eq.k, eq.sigma, rec.root_decimal, rec.inverse_rate, rec.subexp, rec.root.sturm_certified
    );
    Ok(Output {
        command: "growth",
        params: json!({"equation": id.name(), "k": eq.k, "sigma": eq.sigma, "digits": digits}),
        text,
        payload: json!({
            "root": rec.root_decimal,
            "inverse_rate": rec.inverse_rate,
            "enclosure": [rec.root.lo.to_string(), rec.root.hi.to_string()],
            "subexp": rec.subexp.to_string(),
            "certified": rec.root.sturm_certified,
        }),
    })
}

fn cmd_tables(which: &str, digits: usize) -> Result<Output, CliError> {
    let ids: Vec<TableId> = if which == "all" {
        TableId::ALL.to_vec()
    } else {
        vec![TableId::from_name(which).ok_or_else(|| {
            CliError::Usage(format!("unknown table '{which}' (known: all, lv5, lv1, struct2, struct3)"))
        })?]
    };
    let mut text = String::new();
    let mut payload = Vec::new();
    for (i, id) in ids.iter().enumerate() {
        let table = growth_table(*id, digits).map_err(asymptotics_error)?;
        if ids.len() > 1 {
            if i > 0 {
                text.push('\n');
            }
            writeln!(text, "# {}: {}", id.name(), id.title()).unwrap();
        }
        text.push_str("row");
        for k in &table.ks {
            write!(text, "\tk={k}").unwrap();
        }
        text.push('\n');
        let mut rows = Vec::new();
        for row in &table.rows {
            text.push_str(&row.label);
            for rec in &row.records {
                write!(text, "\t{}", rec.inverse_rate).unwrap();
            }
            text.push('\n');
            rows.push(json!({
                "label": row.label,
                "equation": row.equation.name(),
                "sigma": row.sigma,
                "values": row.records.iter().map(|r| r.inverse_rate.clone()).collect::<Vec<_>>(),
            }));
        }
        payload.push(json!({"table": id.name(), "title": id.title(), "ks": table.ks, "rows": rows}));
    }
    Ok(Output {
        command: "tables",
        params: json!({"which": which, "digits": digits}),
        text,
        payload: Value::Array(payload),
    })
}

fn cmd_verify(suite: &str) -> Result<(Output, bool), CliError> {
    let s = Suite::from_name(suite).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        CliError::Usage(format!("unknown suite '{suite}' (known: {})", names.join(", ")))
    })?;
    let checks = verify::run_suite(s, &Tolerances::default());
    let passed = verify::all_passed(&checks);
    let mut text = String::new();
    for c in &checks {
        writeln!(text, "{c}").unwrap();
    }
    let failed = checks.iter().filter(|c| !c.informational && !c.passed).count();
    writeln!(text, "{}: {} checks, {failed} failed", if passed { "PASS" } else { "FAIL" }, checks.len()).unwrap();
    let payload = json!({
        "passed": passed,
        "checks": checks.iter().map(|c| json!({
            "criterion": c.criterion,
            "name": c.name,
            "passed": c.passed,
            "informational": c.informational,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    Ok((
        Output {
            command: "verify",
            params: json!({"suite": s.name()}),
            text,
            payload,
        },
        passed,
    ))
}

fn run(cli: &Cli) -> Result<(Output, bool), CliError> {
    let ok = |o| Ok((o, true));
    match &cli.command {
        Command::Enumerate { family, p, n, cap } => ok(cmd_enumerate(family, *p, *n, *cap)?),
        Command::Census { level, p, n, cap, cumulative, list } => ok(cmd_census(*level, *p, *n, *cap, *cumulative, *list)?),
        Command::Count { family, p, n, arcs, one_arcs, isolated, cap } => {
            ok(cmd_count(family, *p, *n, *arcs, *one_arcs, *isolated, *cap)?)
        }
        Command::Matchings { k, order, route, one_arcs } => ok(cmd_matchings(*k, *order, route, *one_arcs)?),
        Command::Series { which, p, order } => ok(cmd_series(which, *p, *order)?),
        Command::Shape { input, level, p } => ok(cmd_shape(input, *level, *p, cli.verbose)?),
        Command::Growth { equation, p, digits } => ok(cmd_growth(equation, *p, *digits)?),
        Command::Tables { which, digits } => ok(cmd_tables(which, *digits)?),
        Command::Verify { suite } => cmd_verify(suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            print!("{}", out.render(cli.format));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
