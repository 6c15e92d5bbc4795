use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fpcoh::{run_campaign, CampaignConfig, CheckJson};
use fpcoh_core::*;

#[derive(Parser)]
#[command(name = "fpcoh", version, about = "Exact F_p commutative algebra and local cohomology checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct RingArgs {
    /// Characteristic (a prime).
    #[arg(long)]
    p: u64,
    /// Number of variables x1..xn.
    #[arg(long)]
    n: usize,
    /// grevlex, lex or elim:K
    #[arg(long, default_value = "grevlex")]
    order: String,
    #[arg(long, env = "FPCOH_MAX_REDUCTIONS", default_value_t = Limits::default().max_reductions)]
    max_reductions: usize,
    #[arg(long, env = "FPCOH_MAX_BASIS", default_value_t = Limits::default().max_basis_size)]
    max_basis: usize,
}

#[derive(Args, Clone)]
struct GensArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Comma-separated generators, e.g. "x1^2, x1*x2 - 1".
    #[arg(long)]
    gens: String,
}

#[derive(Args, Clone)]
struct PointArgs {
    /// Comma-separated coordinates of a rational point (default: origin).
    #[arg(long)]
    point: Option<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis.
    Gb(GensArgs),
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        #[command(flatten)]
        g: GensArgs,
        #[arg(long)]
        poly: String,
    },
    /// Saturation by the maximal ideal of a point.
    Saturate {
        #[command(flatten)]
        g: GensArgs,
        #[arg(long)]
        point: Option<String>,
    },
    /// Frobenius bracket power of an ideal.
    Frobpow {
        #[command(flatten)]
        g: GensArgs,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Components of a polynomial over the monomial basis of R over R^q.
    Frobdecomp {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Koszul differentials of f^t and the d∘d check.
    Koszul {
        #[command(flatten)]
        g: GensArgs,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Presentation of the i-th Koszul cohomology.
    Cohomology {
        #[command(flatten)]
        g: GensArgs,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Minimal free resolution of R/I.
    Resolve(GensArgs),
    /// Projective dimension and depth of R/I.
    Pd(GensArgs),
    /// Does R/I have m-torsion at the point?
    CheckQ1 {
        #[command(flatten)]
        g: GensArgs,
        #[command(flatten)]
        at: PointArgs,
    },
    /// Certificate for vanishing of the torsion of the top local cohomology.
    CheckTopvan {
        #[command(flatten)]
        g: GensArgs,
        #[command(flatten)]
        at: PointArgs,
        #[arg(long, default_value_t = 3)]
        e_max: u32,
    },
    /// Frobenius killing of the torsion of a Koszul cohomology module.
    CheckPropvan {
        #[command(flatten)]
        g: GensArgs,
        #[command(flatten)]
        at: PointArgs,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 4)]
        level_cap: u32,
    },
    /// Component identities for the dual of multiplication by h.
    TdCheck {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        h: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Seeded random trials of the q1 torsion and pd-bound checks.
    Campaign {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Comma-separated generator degrees.
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        e_max: u32,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Allow lower-degree terms (skips the pd bound).
        #[arg(long)]
        nonhomogeneous: bool,
        #[arg(long)]
        random_point: bool,
        #[arg(long)]
        workers: Option<usize>,
        /// Record per-trial wall time (reports are then not reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long, env = "FPCOH_MAX_REDUCTIONS", default_value_t = Limits::default().max_reductions)]
        max_reductions: usize,
        #[arg(long, env = "FPCOH_MAX_BASIS", default_value_t = Limits::default().max_basis_size)]
        max_basis: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

impl RingArgs {
    fn ring(&self) -> CliResult<PolyRing> {
        let order = match self.order.as_str() {
            "grevlex" => MonomialOrder::GrevLex,
            "lex" => MonomialOrder::Lex,
            other => match other.strip_prefix("elim:").map(str::parse) {
                Some(Ok(k)) => MonomialOrder::Elimination(k),
                _ => return Err(CliError::Usage(format!("unknown order {other:?}"))),
            },
        };
        Ok(PolyRing::new(self.p, self.n, order)?)
    }

    fn limits(&self) -> Limits {
        Limits {
            max_reductions: self.max_reductions,
            max_basis_size: self.max_basis,
            ..Limits::default()
        }
    }
}

impl GensArgs {
    fn parts(&self) -> CliResult<(PolyRing, Vec<Polynomial>, Limits)> {
        let ring = self.ring.ring()?;
        let gens = parse_polynomial_list(ring, &self.gens)?;
        Ok((ring, gens, self.ring.limits()))
    }

    fn ideal(&self) -> CliResult<Ideal> {
        let (ring, gens, limits) = self.parts()?;
        Ok(Ideal::new(ring, gens)?.with_limits(limits))
    }
}

fn point(ring: &PolyRing, text: Option<&str>) -> CliResult<RationalPoint> {
    let Some(text) = text else {
        return Ok(RationalPoint::origin(ring));
    };
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("bad point {text:?}: {e}")))?;
    Ok(RationalPoint::new(ring, &coords)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => writeln!(std::io::stdout(), "{text}")?,
    }
    Ok(())
}

fn code_for(outcome: Outcome) -> u8 {
    match outcome {
        Outcome::Fail => 1,
        Outcome::ResourceLimit => 2,
        _ => 0,
    }
}

fn check(report: &CheckReport, out: Option<&PathBuf>) -> CliResult<u8> {
    let json = serde_json::to_string_pretty(&CheckJson::from(report)).expect("report serializes");
    emit(out, &json)?;
    Ok(code_for(report.outcome))
}

fn print_matrix(m: &PolyMatrix) {
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|c| m.entry(r, c).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn run(cmd: Command) -> CliResult<u8> {
    match cmd {
        Command::Gb(g) => {
            let i = g.ideal()?;
            println!("{}", format_polynomial_list(i.groebner_basis()?));
        }
        Command::Nf { g, poly } => {
            let i = g.ideal()?;
            let f = parse_polynomial(*i.ring(), &poly)?;
            println!("{}", i.normal_form(&f)?);
        }
        Command::Saturate { g, point: pt } => {
            let i = g.ideal()?;
            let a = point(i.ring(), pt.as_deref())?;
            let sat = i.saturation(&Ideal::maximal_at(*i.ring(), &a)?)?;
            println!("{}", format_polynomial_list(sat.groebner_basis()?));
        }
        Command::Frobpow { g, l } => {
            let i = g.ideal()?;
            let lvl = FrobeniusLevel::for_ring(i.ring(), l)?;
            println!("{}", format_polynomial_list(bracket_power(&i, lvl)?.gens()));
        }
        Command::Frobdecomp { ring, poly, l } => {
            let r = ring.ring()?;
            let f = parse_polynomial(r, &poly)?;
            let lvl = FrobeniusLevel::for_ring(&r, l)?;
            for (i, c) in frobenius_decompose(&f, lvl).components() {
                let idx: Vec<String> = i.exps().iter().map(u32::to_string).collect();
                println!("({}): {}", idx.join(","), c);
            }
        }
        Command::Koszul { g, t } => {
            let (_, f, _) = g.parts()?;
            let k = build_koszul(&f, t)?;
            for (j, d) in k.differentials().iter().enumerate() {
                println!("d^{j}: {} x {}", d.nrows(), d.ncols());
                print_matrix(d);
            }
            println!("d∘d = 0: {}", k.squares_vanish()?);
        }
        Command::Cohomology { g, i, t } => {
            let (_, f, limits) = g.parts()?;
            let k = build_koszul(&f, t)?;
            let h = koszul_cohomology(&k, i, &limits)?;
            println!("rank: {}", h.rank());
            println!("zero: {}", h.is_zero(&limits)?);
            if let Some(gens) = h.generators() {
                println!("generators:");
                print_matrix(gens);
            }
            println!("relations:");
            print_matrix(h.relations());
        }
        Command::Resolve(g) => {
            let i = g.ideal()?;
            let res = free_resolution(&ModulePresentation::cyclic(&i), i.ring().n(), i.limits())?;
            let ranks: Vec<String> = res.ranks().iter().map(usize::to_string).collect();
            println!("ranks: {}", ranks.join(" <- "));
            for (k, d) in res.maps().iter().enumerate() {
                println!("d_{}:", k + 1);
                print_matrix(d);
            }
        }
        Command::Pd(g) => {
            let i = g.ideal()?;
            let pd = projective_dimension(&i)?;
            println!("pd: {pd}");
            println!("depth: {}", depth_via_ab(pd, i.ring().n())?);
        }
        Command::CheckQ1 { g, at } => {
            let (ring, f, limits) = g.parts()?;
            let a = point(&ring, at.point.as_deref())?;
            return check(&question_q_check(&f, &a, &limits)?, at.out.as_ref());
        }
        Command::CheckTopvan { g, at, e_max } => {
            let (ring, f, limits) = g.parts()?;
            let a = point(&ring, at.point.as_deref())?;
            return check(&top_lc_vanishing_certificate(&f, &a, e_max, &limits)?, at.out.as_ref());
        }
        Command::CheckPropvan { g, at, i, level_cap } => {
            let (ring, f, limits) = g.parts()?;
            let a = point(&ring, at.point.as_deref())?;
            return check(&prop_van_check(&f, i, &a, level_cap, &limits)?, at.out.as_ref());
        }
        Command::TdCheck { ring, h, g, l } => {
            let r = ring.ring()?;
            let lvl = FrobeniusLevel::for_ring(&r, l)?;
            let ok = td_roundtrip_check(&parse_polynomial(r, &h)?, &parse_polynomial(r, &g)?, lvl)?;
            println!("{ok}");
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Campaign {
            p,
            n,
            degrees,
            trials,
            seed,
            e_max,
            density,
            nonhomogeneous,
            random_point,
            workers,
            timing,
            max_reductions,
            max_basis,
            out,
        } => {
            let cfg = CampaignConfig {
                p,
                n,
                degrees,
                trials,
                seed,
                e_max,
                max_reductions,
                max_basis_size: max_basis,
                density,
                homogeneous: !nonhomogeneous,
                random_point,
                workers,
                timing,
            };
            let report = run_campaign(&cfg)?;
            emit(out.as_ref(), &report.to_json())?;
            if report.summary.fail > 0 {
                return Ok(1);
            }
            if report.summary.resource_limit > 0 {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
