use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyflag::constructions::{e_construct, generate, product, pyramid, ConstructionSpec, Generated};
use polyflag::flag::{expand_four_flag, flag_vector, four_flag, FlagVector, FourFlag};
use polyflag::geometry::{convex_hull, PointSet};
use polyflag::lattice::{
    are_isomorphic, dual, face_type_flags, hierarchy_report, is_connected, is_eulerian, is_lattice,
    Classification, LatticeInput,
};
use polyflag::report::{Report, Value};
use polyflag::tilings::{
    densities, fat_tiling_fatness, schlegel_tiling, tiling_fatness, Preset, TilingDensity,
};
use polyflag::{Error, FaceLattice};

#[derive(Parser)]
#[command(name = "polyflag", version, about = "Face lattices and flag-vectors of 3- and 4-polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and print it as a lattice or flag file.
    Generate {
        name: String,
        params: Vec<String>,
        /// Print the flag-vector instead of the lattice.
        #[arg(long)]
        flag_only: bool,
        /// Maximum number of lattice elements.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Report every invariant of a lattice or flag file.
    Analyze {
        /// Input file; `-` or absent reads stdin.
        file: Option<String>,
        /// Condensed flag-vector "f0,f1,f2,f3;f03" instead of a file.
        #[arg(long)]
        flag: Option<String>,
        #[arg(long)]
        json: bool,
        /// Input is a JSON report; display it.
        #[arg(long)]
        from_report: bool,
        /// Also check connectivity of every interval.
        #[arg(long)]
        strict_intervals: bool,
    },
    /// Test one property; exit status 1 when it fails.
    Check {
        which: Which,
        file: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict_intervals: bool,
    },
    /// Apply a lattice operation and print the resulting lattice.
    Transform {
        op: Op,
        file: Option<String>,
        /// Second factor for `product`.
        #[arg(long = "with")]
        with: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Convex hull of a point file, printed as a lattice.
    Hull { file: Option<String> },
    /// Decide whether two lattices are isomorphic.
    Compare { a: String, b: String },
    /// Density calculus for periodic tilings.
    Tiling {
        #[command(subcommand)]
        command: TilingCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Hierarchy,
    Eulerian,
    Lattice,
    Connected,
    FaceTypes,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Dual,
    Pyramid,
    Product,
    EConstruct,
}

#[derive(Subcommand)]
enum TilingCommand {
    /// Densities and fatness of orbit counts.
    Analyze {
        #[command(flatten)]
        source: TilingSource,
        #[arg(long)]
        json: bool,
    },
    /// Replace every tile of a tetrahedral host by a Schlegel diagram.
    Schlegel {
        #[arg(long)]
        host: String,
        #[arg(long)]
        flag: String,
        #[arg(long)]
        json: bool,
    },
    /// Fatness of the tiling built from E(C_n × C_n).
    FatLimit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TilingSource {
    /// Counts "c0,c1,c2,c3".
    #[arg(long)]
    counts: Option<String>,
    /// `cubic` or `tetrahedral`.
    #[arg(long)]
    preset: Option<String>,
}

enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read_input(path: Option<&str>) -> Result<String, Failure> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Input(format!("{p}: {e}"))),
    }
}

fn descriptor(path: Option<&str>) -> String {
    path.filter(|p| *p != "-").unwrap_or("<stdin>").to_string()
}

fn read_lattice(path: Option<&str>) -> Result<FaceLattice, Failure> {
    Ok(LatticeInput::parse(&read_input(path)?)?.into_lattice()?)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn numbers(f: &polyflag::FVector) -> Vec<serde_json::Number> {
    f.0.iter()
        .map(|x| x.to_string().parse().expect("integer literal"))
        .collect()
}

fn flag_file(fv: &FlagVector) -> String {
    serde_json::to_string_pretty(&fv.to_json()).expect("serializable") + "\n"
}

fn cmd_generate(name: &str, params: &[String], flag_only: bool, limit: Option<usize>) -> Outcome {
    let spec = ConstructionSpec::parse(name, params)?;
    Ok(match generate(&spec, limit)? {
        Generated::Lattice(l) if flag_only => flag_file(&flag_vector(&l)?),
        Generated::Lattice(l) => l.to_json() + "\n",
        Generated::Flag(q) => flag_file(&expand_four_flag(&q)?),
        Generated::MgProduct(mg) => {
            #[derive(Serialize)]
            struct Out {
                f_vector: Vec<serde_json::Number>,
                fatness: Option<Value>,
            }
            json(&Out {
                f_vector: numbers(&mg.f),
                fatness: mg.fatness.as_ref().map(Value::from),
            })
        }
    })
}

fn render(r: &Report, as_json: bool) -> String {
    if as_json {
        r.to_json() + "\n"
    } else {
        r.to_table()
    }
}

fn cmd_analyze(
    file: Option<&str>,
    flag: Option<&str>,
    as_json: bool,
    from_report: bool,
    strict: bool,
) -> Outcome {
    if let Some(text) = flag {
        let q: FourFlag = text.parse()?;
        return Ok(render(&Report::for_flag(text, &q), as_json));
    }
    let text = read_input(file)?;
    if from_report {
        return Ok(render(&Report::from_json(&text)?, as_json));
    }
    let name = descriptor(file);
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let report = if value.get("entries").is_some() {
        let fv = FlagVector::from_json(&value)?;
        if fv.dim() != 4 {
            return Err(Failure::Input(format!(
                "flag-vector analysis needs d = 4, got d = {}",
                fv.dim()
            )));
        }
        Report::for_flag(&name, &four_flag(&fv)?)
    } else {
        let l = LatticeInput::parse(&text)?.into_lattice()?;
        Report::for_lattice(&name, &l, strict)?
    };
    Ok(render(&report, as_json))
}

fn cmd_check(which: Which, file: Option<&str>, as_json: bool, strict: bool) -> Outcome {
    let l = read_lattice(file)?;
    let (ok, body) = match which {
        Which::Hierarchy => {
            let h = hierarchy_report(&l, strict);
            let ok = h.classification == Classification::ConnectedEulerianLattice
                && h.intervals_connected != Some(false);
            let body = if as_json {
                json(&h)
            } else {
                format!("{}\n", h.classification)
            };
            (ok, body)
        }
        Which::FaceTypes => {
            let t = face_type_flags(&l)?;
            let body = if as_json {
                json(&t)
            } else {
                let opt = |o: Option<bool>| o.map_or("-".to_string(), |b| b.to_string());
                format!(
                    "simplicial {}\nsimple {}\n2-simplicial {}\n2-simple {}\nall facets simple {}\n",
                    t.simplicial,
                    t.simple,
                    opt(t.two_simplicial),
                    opt(t.two_simple),
                    opt(t.all_facets_simple)
                )
            };
            (true, body)
        }
        w => {
            let (label, ok) = match w {
                Which::Eulerian => ("eulerian", is_eulerian(&l)),
                Which::Lattice => ("lattice", is_lattice(&l)),
                _ => ("connected", is_connected(&l)),
            };
            let body = if as_json {
                json(&serde_json::json!({ label: ok }))
            } else {
                format!("{label}: {}\n", if ok { "yes" } else { "no" })
            };
            (ok, body)
        }
    };
    if ok {
        Ok(body)
    } else {
        Err(Failure::Check(body))
    }
}

fn cmd_transform(op: Op, file: Option<&str>, with: Option<&str>, limit: Option<usize>) -> Outcome {
    let l = read_lattice(file)?;
    let out = match op {
        Op::Dual => dual(&l)?,
        Op::Pyramid => pyramid(&l)?,
        Op::Product => {
            let other = with.ok_or_else(|| Failure::Input("product needs --with FILE".into()))?;
            if other == "-" && file.is_none_or(|f| f == "-") {
                return Err(Failure::Input("only one input can come from stdin".into()));
            }
            product(&l, &read_lattice(Some(other))?)?
        }
        Op::EConstruct => e_construct(&l)?,
    };
    if let Some(limit) = limit {
        if out.len() > limit {
            return Err(Error::SizeLimit(format!("{} elements exceed the limit {limit}", out.len())).into());
        }
    }
    Ok(out.to_json() + "\n")
}

fn cmd_hull(file: Option<&str>) -> Outcome {
    let ps = PointSet::parse(&read_input(file)?)?;
    Ok(convex_hull(&ps)?.lattice()?.to_json() + "\n")
}

fn cmd_compare(a: &str, b: &str) -> Outcome {
    if a == "-" && b == "-" {
        return Err(Failure::Input("only one input can come from stdin".into()));
    }
    let (la, lb) = (read_lattice(Some(a))?, read_lattice(Some(b))?);
    if are_isomorphic(&la, &lb) {
        Ok("isomorphic: yes\n".into())
    } else {
        Err(Failure::Check("isomorphic: no\n".into()))
    }
}

#[derive(Serialize)]
struct TilingReport {
    name: Option<String>,
    counts: Vec<Value>,
    densities: Vec<Value>,
    euler_sum: Value,
    fatness: Value,
}

fn tiling_report(t: &TilingDensity, as_json: bool) -> String {
    let r = TilingReport {
        name: t.name.clone(),
        counts: t.counts.iter().map(Value::from).collect(),
        densities: densities(t).iter().map(Value::from).collect(),
        euler_sum: Value::from(&t.euler_sum()),
        fatness: Value::from(&tiling_fatness(t)),
    };
    if as_json {
        return json(&r);
    }
    let list = |v: &[Value]| v.iter().map(|x| x.exact.as_str()).collect::<Vec<_>>().join(",");
    let mut s = String::new();
    if let Some(n) = &r.name {
        s += &format!("{:<12} {n}\n", "name");
    }
    s += &format!("{:<12} ({})\n", "counts", list(&r.counts));
    s += &format!("{:<12} ({})\n", "densities", list(&r.densities));
    s += &format!("{:<12} {}\n", "euler sum", r.euler_sum.exact);
    s += &format!("{:<12} {} ≈ {}\n", "fatness", r.fatness.exact, r.fatness.decimal);
    s
}

fn cmd_tiling(cmd: TilingCommand) -> Outcome {
    match cmd {
        TilingCommand::Analyze { source, json: j } => {
            let t = match (source.counts, source.preset) {
                (Some(c), _) => TilingDensity::parse_counts(&c)?,
                (_, Some(p)) => TilingDensity::preset(p.parse::<Preset>()?),
                _ => unreachable!("clap enforces one source"),
            };
            Ok(tiling_report(&t, j))
        }
        TilingCommand::Schlegel { host, flag, json: j } => {
            let host = TilingDensity::preset(host.parse::<Preset>()?);
            let q: FourFlag = flag.parse()?;
            Ok(tiling_report(&schlegel_tiling(&host, &q)?, j))
        }
        TilingCommand::FatLimit { n, json: j } => {
            let v = Value::from(&fat_tiling_fatness(n)?);
            Ok(if j {
                json(&serde_json::json!({ "n": n, "fatness": v }))
            } else {
                format!("fatness of E(C_{n} x C_{n}) tiling: {} ≈ {}\n", v.exact, v.decimal)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            name,
            params,
            flag_only,
            limit,
        } => cmd_generate(&name, &params, flag_only, limit),
        Command::Analyze {
            file,
            flag,
            json,
            from_report,
            strict_intervals,
        } => cmd_analyze(file.as_deref(), flag.as_deref(), json, from_report, strict_intervals),
        Command::Check {
            which,
            file,
            json,
            strict_intervals,
        } => cmd_check(which, file.as_deref(), json, strict_intervals),
        Command::Transform {
            op,
            file,
            with,
            limit,
        } => cmd_transform(op, file.as_deref(), with.as_deref(), limit),
        Command::Hull { file } => cmd_hull(file.as_deref()),
        Command::Compare { a, b } => cmd_compare(&a, &b),
        Command::Tiling { command } => cmd_tiling(command),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
