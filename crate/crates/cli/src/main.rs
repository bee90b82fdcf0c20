use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use facemodel::cyclo::format_complex;
use facemodel::exterior::dq_with;
use facemodel::fusion::{effective_iota, kac_peterson, theta_weight, verlinde};
use facemodel::lattice::{Graph, QInts};
use facemodel::statesum::{parse_diagram, tau};
use facemodel::suites::{applies, run_suites, SUITES};
use facemodel::{CycNum, Error, ModelParams, Report};

#[derive(Parser)]
#[command(
    name = "facemodel",
    version,
    about = "Exact SU(N)_L face models, modular data and SU(2) surgery invariants"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Suites to run (repeat or comma-separate); default: all that apply.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the S-matrix.
    Smatrix {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Print the fusion coefficients.
    Fusion {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Print quantum dimensions and twists.
    Dims {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Evaluate the surgery invariant of a sliced diagram file.
    Tau {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        file: std::path::PathBuf,
        /// Also print the float embedding of each constant.
        #[arg(long)]
        embed: bool,
    },
}

#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long = "N", default_value_t = 2)]
    n: usize,
    #[arg(long = "L", default_value_t = 2)]
    l: u32,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps: i8,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    iota: i8,
    /// zeta = exp(2 pi i k / 2N(N+L)).
    #[arg(long = "zeta-exp", default_value_t = 1, allow_hyphen_values = true)]
    zeta_exp: i64,
    /// t = exp(2 pi i k / 2(N+L)); defaults to the value forced by zeta.
    #[arg(long = "t-exp", allow_hyphen_values = true)]
    t_exp: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

impl ParamArgs {
    fn build(&self) -> Result<ModelParams, Error> {
        match self.t_exp {
            Some(kt) => ModelParams::new(self.n, self.l, self.eps, self.iota, kt, self.zeta_exp),
            None => ModelParams::from_zeta(self.n, self.l, self.eps, self.iota, self.zeta_exp),
        }
    }
}

struct Out {
    format: Format,
    buf: String,
}

impl Out {
    fn new(format: Format) -> Self {
        Out {
            format,
            buf: String::new(),
        }
    }

    fn header(&mut self, cmd: &str, p: &ModelParams, seed: Option<u64>) {
        let seed = seed.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        match self.format {
            Format::Text => {
                let _ = writeln!(
                    self.buf,
                    "# facemodel {cmd}: N={} L={} eps={} iota={} zeta-exp={} t-exp={} order={} seed={seed}",
                    p.n,
                    p.l,
                    p.eps,
                    p.iota,
                    p.kz,
                    p.kt,
                    p.order()
                );
            }
            Format::Machine => {
                self.row("command", cmd);
                self.row(
                    "params",
                    &format!(
                        "N={} L={} eps={} iota={} zeta-exp={} t-exp={}",
                        p.n, p.l, p.eps, p.iota, p.kz, p.kt
                    ),
                );
                self.row("order", &p.order().to_string());
                self.row("seed", &seed);
            }
        }
    }

    fn row(&mut self, key: &str, value: &str) {
        let _ = writeln!(self.buf, "{key}\t{value}");
    }

    fn num(&mut self, key: &str, x: &CycNum) {
        match self.format {
            Format::Text => {
                let _ = writeln!(
                    self.buf,
                    "{key:<16} {:<40} {}",
                    x.poly_string(),
                    format_complex(x.to_complex())
                );
            }
            Format::Machine => self.row(
                key,
                &format!("{}\t{}", x.poly_string(), format_complex(x.to_complex())),
            ),
        }
    }

    fn print(self) {
        print!("{}", self.buf);
    }
}

fn config_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn weight_label(g: &Graph, v: usize) -> String {
    let w = &g.weight(v).0;
    w.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn verify(params: &ParamArgs, suites: &[String], seed: u64) -> ExitCode {
    let p = match params.build() {
        Ok(p) => p,
        Err(e) => return config_error(e),
    };
    let names: Vec<&str> = if suites.is_empty() {
        SUITES.iter().copied().filter(|s| applies(s, &p)).collect()
    } else {
        let mut v = Vec::new();
        for s in suites {
            let Some(&name) = SUITES.iter().find(|x| **x == s.as_str()) else {
                return config_error(format!(
                    "unknown suite '{s}' (known: {})",
                    SUITES.join(", ")
                ));
            };
            if !applies(name, &p) {
                return config_error(format!(
                    "suite '{name}' does not apply to N={} L={} eps={}",
                    p.n, p.l, p.eps
                ));
            }
            v.push(name);
        }
        v
    };
    let reports = match run_suites(&names, &p, seed) {
        Ok(r) => r,
        Err(e) => return config_error(e),
    };
    let mut out = Out::new(params.format);
    out.header("verify", &p, Some(seed));
    let ok = reports.iter().all(Report::passed);
    for r in &reports {
        match params.format {
            Format::Text => out.buf += &r.to_string(),
            Format::Machine => {
                for c in &r.checks {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    out.row(
                        &format!("{}/{}", r.suite, c.name),
                        &format!("{status}\t{}\t{}", c.cases, c.anchor),
                    );
                }
            }
        }
    }
    match params.format {
        Format::Text => {
            let _ = writeln!(out.buf, "{}", if ok { "PASS all" } else { "FAIL" });
        }
        Format::Machine => out.row("result", if ok { "PASS" } else { "FAIL" }),
    }
    out.print();
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn modular_params(params: &ParamArgs) -> Result<ModelParams, ExitCode> {
    let p = params.build().map_err(config_error)?;
    p.check_modular().map_err(config_error)?;
    Ok(p)
}

fn smatrix(params: &ParamArgs) -> ExitCode {
    let p = match modular_params(params) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let s = match kac_peterson(&p, effective_iota(&p)) {
        Ok(s) => s,
        Err(e) => return config_error(e),
    };
    let g = Graph::new(p.n, p.l);
    let mut out = Out::new(params.format);
    out.header("smatrix", &p, None);
    for a in 0..s.dim() {
        for b in 0..s.dim() {
            out.num(
                &format!("S[{};{}]", weight_label(&g, a), weight_label(&g, b)),
                s.get(a, b),
            );
        }
    }
    out.print();
    ExitCode::SUCCESS
}

fn fusion(params: &ParamArgs) -> ExitCode {
    let p = match modular_params(params) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let f = match kac_peterson(&p, effective_iota(&p)).and_then(|s| verlinde(&s)) {
        Ok(f) => f,
        Err(e) => return config_error(e),
    };
    let g = Graph::new(p.n, p.l);
    let mut out = Out::new(params.format);
    out.header("fusion", &p, None);
    let d = f.dim;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let key = format!(
                    "N[{};{}->{}]",
                    weight_label(&g, a),
                    weight_label(&g, b),
                    weight_label(&g, c)
                );
                out.row(&key, &f.get(a, b, c).to_string());
            }
        }
    }
    out.print();
    ExitCode::SUCCESS
}

fn dims(params: &ParamArgs) -> ExitCode {
    let p = match params.build() {
        Ok(p) => p,
        Err(e) => return config_error(e),
    };
    let g = Graph::new(p.n, p.l);
    let qi = match QInts::new(&p.t(), 2 * p.h() + 2) {
        Ok(q) => q,
        Err(e) => return config_error(e),
    };
    let mut out = Out::new(params.format);
    out.header("dims", &p, None);
    for v in 0..g.num_vertices() {
        let label = weight_label(&g, v);
        match dq_with(&g, &qi, v) {
            Ok(d) => out.num(&format!("dim[{label}]"), &d),
            Err(e) => return config_error(e),
        }
        out.num(&format!("theta[{label}]"), &theta_weight(&p, g.weight(v)));
    }
    if p.n == 2 {
        for b in facemodel::su2::b_set(p.l) {
            out.row("B", &format!("({};{},{})", b.k, b.i, b.j));
        }
    }
    out.print();
    ExitCode::SUCCESS
}

fn tau_cmd(params: &ParamArgs, file: &std::path::Path, embed: bool) -> ExitCode {
    let p = match params.build() {
        Ok(p) => p,
        Err(e) => return config_error(e),
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return config_error(format!("{}: {e}", file.display())),
    };
    let d = match parse_diagram(&text) {
        Ok(d) => d,
        Err(e) => return config_error(format!("{}:{e}", file.display())),
    };
    let v = match tau(&d, &p) {
        Ok(v) => v,
        Err(e) => return config_error(e),
    };
    let mut out = Out::new(params.format);
    out.header("tau", &p, None);
    out.row("components", &v.components.to_string());
    out.row("crossings", &d.crossings().to_string());
    out.row("sigma", &v.sigma.to_string());
    let exact = format!(
        "({}) + ({})*Delta",
        v.value.a.poly_string(),
        v.value.b.poly_string()
    );
    out.row("tau", &exact);
    out.row("tau.float", &format_complex(v.value.to_complex()));
    if embed {
        out.num("Delta^2", &v.delta_sq);
        out.num("D", &v.gauss);
        out.num("link-sum", &v.link_sum);
    } else {
        out.row("Delta^2", &v.delta_sq.poly_string());
        out.row("D", &v.gauss.poly_string());
    }
    out.print();
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = std::env::var("FACEMODEL_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match &cli.cmd {
        Cmd::Verify {
            params,
            suite,
            seed,
        } => verify(params, suite, *seed),
        Cmd::Smatrix { params } => smatrix(params),
        Cmd::Fusion { params } => fusion(params),
        Cmd::Dims { params } => dims(params),
        Cmd::Tau {
            params,
            file,
            embed,
        } => tau_cmd(params, file, *embed),
    }
}
