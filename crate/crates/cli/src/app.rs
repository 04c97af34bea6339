//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use stratih_core::euler::{ichi_c_direct, ichi_c_stratumwise, link_ih};
use stratih_core::gallery;
use stratih_core::hopf::{multiplicity, nonsingular_radial_exists, verify_poincare_hopf, verify_poincare_hopf_against};
use stratih_core::intersection::ih_dims;
use stratih_core::{ComponentId, Perversity, StratifiedSpace};

use crate::error::CliError;
use crate::files::{SpaceFile, ZerosFile};
use crate::report::{ChiReport, ConverseReport, Format, Header, IhReport, MultiplicityReport, MultiplicityRow, PhReportOut};
use crate::{EXIT_MISMATCH, EXIT_OK};

/// Spaces above this dimension need `--force-chains` for chain-level work.
pub const CHAIN_GATE_DIM: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "stratih", version, about = "Intersection homology and stratified Poincaré-Hopf checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print or save a gallery space; lists the gallery without a name
    Gallery {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Intersection homology dimensions
    Ih {
        /// Space file or gallery name
        space: String,
        #[command(flatten)]
        opts: Common,
    },
    /// Intersection Euler characteristic
    Chi {
        space: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[command(flatten)]
        opts: Common,
    },
    /// Multiplicity at the components of a stratum
    Multiplicity {
        space: String,
        #[arg(long)]
        stratum: u32,
        #[arg(long)]
        component: Option<usize>,
        #[command(flatten)]
        opts: Common,
    },
    /// Compare the sum of singular indices with the intersection Euler characteristic
    VerifyPh {
        space: String,
        zeros: PathBuf,
        #[command(flatten)]
        opts: Common,
    },
    /// Whether a nonsingular totally radial field exists
    Converse {
        space: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// zero, lower-middle, upper-middle, top or custom:p2,...,pn
    #[arg(long, short = 'p')]
    pub perversity: String,
    /// Barycentric subdivisions before computing; defaults to the space's own
    #[arg(long)]
    pub subdivide: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Allow chain-level computations on spaces of dimension above 4
    #[arg(long)]
    pub force_chains: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Stratumwise,
    Both,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code();
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Loaded {
    space: StratifiedSpace,
    subdivisions: usize,
}

fn load_space(arg: &str) -> Result<Loaded, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let file = SpaceFile::read(path)?;
        let space = file.to_space()?;
        return Ok(Loaded { space, subdivisions: file.subdivisions.unwrap_or(0) });
    }
    match gallery::entry(arg) {
        Ok(entry) => Ok(Loaded { space: gallery::gallery(arg)?, subdivisions: entry.subdivisions }),
        Err(_) => Err(CliError::Input(format!("{arg:?} is neither a readable file nor a gallery space"))),
    }
}

fn chains_allowed(space: &StratifiedSpace, subdivisions: usize, force: bool, err: &mut dyn Write) -> bool {
    if space.n() <= CHAIN_GATE_DIM {
        return true;
    }
    if force {
        let _ = writeln!(
            err,
            "warning: chain-level intersection homology in dimension {} on {} simplices ({} subdivisions)",
            space.n(),
            space.complex().num_simplices(),
            subdivisions
        );
    }
    force
}

fn gate_error(space: &StratifiedSpace) -> CliError {
    CliError::Input(format!(
        "chain-level intersection homology in dimension {} is disabled by default; pass --force-chains",
        space.n()
    ))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Gallery { name: None, .. } => {
            for e in gallery::list_gallery() {
                emit(out, &format!("{:<26} n={}  {}\n", e.name, e.n, e.description))?;
            }
            Ok(EXIT_OK)
        }
        Command::Gallery { name: Some(name), out: path } => {
            let entry = gallery::entry(&name)?;
            let space = gallery::gallery(&name)?;
            let text = SpaceFile::from_space(&space, Some(entry.subdivisions)).to_json();
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display())))?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Ih { space, opts } => {
            let loaded = load_space(&space)?;
            let p = Perversity::parse(&opts.perversity, loaded.space.n())?;
            let subdivisions = opts.subdivide.unwrap_or(loaded.subdivisions);
            if !chains_allowed(&loaded.space, subdivisions, opts.force_chains, err) {
                return Err(gate_error(&loaded.space));
            }
            let ih = ih_dims(&loaded.space, &p, subdivisions)?;
            let report = IhReport::new(Header::new(&loaded.space, &p, subdivisions), &ih.dims, ih.euler());
            emit(out, &report.render(opts.format))?;
            Ok(EXIT_OK)
        }
        Command::Chi { space, method, opts } => {
            let loaded = load_space(&space)?;
            let p = Perversity::parse(&opts.perversity, loaded.space.n())?;
            let subdivisions = opts.subdivide.unwrap_or(loaded.subdivisions);
            let direct = if method == Method::Stratumwise {
                None
            } else if chains_allowed(&loaded.space, subdivisions, opts.force_chains, err) {
                Some(ichi_c_direct(&loaded.space, &p, subdivisions)?)
            } else {
                return Err(gate_error(&loaded.space));
            };
            let stratumwise =
                if method == Method::Direct { None } else { Some(ichi_c_stratumwise(&loaded.space, &p, subdivisions)?) };
            let report = ChiReport::new(Header::new(&loaded.space, &p, subdivisions), direct, stratumwise.as_ref());
            emit(out, &report.render(opts.format))?;
            Ok(if report.agree == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Multiplicity { space, stratum, component, opts } => {
            let loaded = load_space(&space)?;
            let s = &loaded.space;
            let p = Perversity::parse(&opts.perversity, s.n())?;
            let subdivisions = opts.subdivide.unwrap_or(loaded.subdivisions);
            s.stratum(stratum)?;
            let comps: Vec<_> = s
                .components()
                .into_iter()
                .filter(|c| c.id.stratum == stratum && component.is_none_or(|k| c.id.component == k))
                .collect();
            if comps.is_empty() {
                let k = component.unwrap_or(0);
                return Err(stratih_core::Error::UnknownComponent { stratum, component: k }.into());
            }
            let mut rows = Vec::new();
            for c in comps {
                let link = if c.dim == s.n() { Vec::new() } else { link_ih(s, &c, &p, subdivisions)? };
                let m = multiplicity(s, &p, ComponentId { stratum, component: c.id.component }, subdivisions)?;
                rows.push(MultiplicityRow {
                    stratum,
                    component: c.id.component,
                    dim: c.dim,
                    chi_c: c.chi_c,
                    link_ih: link,
                    multiplicity: m,
                });
            }
            let report = MultiplicityReport { header: Header::new(s, &p, subdivisions), rows };
            emit(out, &report.render(opts.format))?;
            Ok(EXIT_OK)
        }
        Command::VerifyPh { space, zeros, opts } => {
            let loaded = load_space(&space)?;
            let s = &loaded.space;
            let p = Perversity::parse(&opts.perversity, s.n())?;
            let subdivisions = opts.subdivide.unwrap_or(loaded.subdivisions);
            let zeros = ZerosFile::read(&zeros)?;
            let data = zeros.data();
            let (report, source) = if chains_allowed(s, subdivisions, opts.force_chains, err) {
                (verify_poincare_hopf(s, &p, &data, subdivisions)?, "chains")
            } else {
                let ichi = ichi_c_stratumwise(s, &p, subdivisions)?.total;
                (verify_poincare_hopf_against(s, &p, &data, ichi, subdivisions)?, "stratumwise")
            };
            let out_report = PhReportOut::new(Header::new(s, &p, subdivisions), zeros.field_class.clone(), &report, source);
            emit(out, &out_report.render(opts.format))?;
            Ok(if out_report.equal() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Converse { space, format } => {
            let loaded = load_space(&space)?;
            let decision = nonsingular_radial_exists(&loaded.space);
            let report = ConverseReport::new(&loaded.space, &decision);
            emit(out, &report.render(format))?;
            Ok(if report.exists { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}
