use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use lcdembed_core::embed::{self, certify_minimality, trivial_embedding};
use lcdembed_core::search::{search as run_search, SearchConfig, Strategy};
use lcdembed_core::{Error, FamilySpec, LinearCode, MethodChoice};

use crate::format::{parse_code, parse_matrix, render_code, render_matrix, render_word, MatrixFile, ParseError};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_MATH: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } => EXIT_INPUT,
            CliError::Core(e) => match e {
                Error::EnumerationGuard { .. } | Error::CertificationGuard { .. } | Error::ExhaustiveGuard(_) => {
                    EXIT_GUARD
                }
                Error::SingularD
                | Error::NotLcd
                | Error::Singular
                | Error::SchurPivotSingular
                | Error::ExtractedSingularD
                | Error::TrivialHull
                | Error::ZeroCode
                | Error::ZeroInverse => EXIT_MATH,
                _ => EXIT_INPUT,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Text for standard output plus the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, exit: EXIT_OK }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load_code(path: &Path) -> CliResult<LinearCode> {
    parse_code(&read(path)?).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn load_matrix(path: &Path) -> CliResult<MatrixFile> {
    parse_matrix(&read(path)?).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn header(out: &mut String, c: &LinearCode) {
    let _ = writeln!(out, "q: {}", c.field().order());
    let _ = writeln!(out, "n: {}", c.n());
    let _ = writeln!(out, "k: {}", c.k());
    let _ = writeln!(out, "ip: {}", c.inner_product());
}

pub fn hull(path: &Path) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let mut out = String::new();
    header(&mut out, &c);
    let _ = writeln!(out, "ell: {}", c.hull_dimension());
    let _ = writeln!(out, "shortest_embedding_length: {}", c.n() + c.hull_dimension());
    Ok(Outcome::ok(out))
}

pub fn lcd_check(path: &Path) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let mut out = String::new();
    header(&mut out, &c);
    let _ = writeln!(out, "ell: {}", c.hull_dimension());
    let _ = writeln!(out, "lcd: {}", c.is_lcd());
    Ok(Outcome::ok(out))
}

pub fn mindist(path: &Path, method: MethodChoice, w_max: Option<usize>) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let r = c.min_distance(method, w_max)?;
    let mut out = String::new();
    header(&mut out, &c);
    let _ = writeln!(out, "method: {}", r.method.name());
    match r.value {
        lcdembed_core::DistanceValue::Exact(d) => {
            let _ = writeln!(out, "d: {d} (exact)");
        }
        lcdembed_core::DistanceValue::ExceedsBound(w) => {
            let _ = writeln!(out, "d: >{w} (lower bound)");
        }
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness: {}", render_word(c.field(), w));
    }
    Ok(Outcome::ok(out))
}

pub fn wtenum(path: &Path) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let we = c.weight_enumerator()?;
    let mut out = String::new();
    header(&mut out, &c);
    for (w, &count) in we.counts.iter().enumerate().filter(|(_, &x)| x > 0) {
        let _ = writeln!(out, "A_{w}: {count}");
    }
    let _ = writeln!(out, "fingerprint: {}", c.fingerprint()?);
    Ok(Outcome::ok(out))
}

pub fn puncture(path: &Path, coords: &[usize]) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let p = c.puncture(coords)?;
    let note = format!("punctured on {:?}: [{}, {}] -> [{}, {}]", coords, c.n(), c.k(), p.n(), p.k());
    Ok(Outcome::ok(render_code(&p, &[note])))
}

pub fn dual(path: &Path) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let d = c.dual();
    let note = format!("{} dual of a [{}, {}] code", c.inner_product(), c.n(), c.k());
    Ok(Outcome::ok(render_code(&d, &[note])))
}

/// Row-reduces any matrix file to a full-rank generator.
pub fn rref(path: &Path) -> CliResult<Outcome> {
    let m = load_matrix(path)?;
    let basis = m.matrix.row_basis();
    let note = format!("rank {} of {} rows", basis.rows(), m.matrix.rows());
    Ok(Outcome::ok(render_matrix(&basis, m.ip, &[note])))
}

pub fn gen(spec: &FamilySpec) -> CliResult<Outcome> {
    let c = spec.build()?;
    Ok(Outcome::ok(render_code(&c, &[spec.to_string()])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedMode {
    Canonical,
    Trivial,
    Blocks { d: PathBuf, c: PathBuf },
}

pub fn embed(path: &Path, mode: &EmbedMode, output: Option<&Path>, with_distance: bool) -> CliResult<Outcome> {
    let base = load_code(path)?;
    let ell = base.hull_dimension();
    let code = match mode {
        EmbedMode::Trivial => trivial_embedding(&base),
        EmbedMode::Canonical => embed::canonical_shortest_embedding(&base).code,
        EmbedMode::Blocks { d, c } => {
            let d = load_matrix(d)?.matrix;
            let c = load_matrix(c)?.matrix;
            embed::shortest_embedding(&base, &d, &c)?.code
        }
    };
    let mut report = vec![
        format!("base: [{}, {}]", base.n(), base.k()),
        format!("ell: {ell}"),
        format!("length: {}", code.n()),
        format!("lcd: {}", code.is_lcd()),
    ];
    if with_distance {
        let r = code.min_distance(MethodChoice::Auto, None)?;
        report.push(match r.exact() {
            Some(d) => format!("d: {d}"),
            None => "d: unknown".to_string(),
        });
    }
    Ok(Outcome::ok(match output {
        Some(p) => {
            write(p, &render_code(&code, &report))?;
            report.push(format!("output: {}", p.display()));
            report.join("\n") + "\n"
        }
        None => render_code(&code, &report),
    }))
}

pub fn search(path: &Path, cfg: &SearchConfig, out_dir: Option<&Path>) -> CliResult<Outcome> {
    let base = load_code(path)?;
    let rep = run_search(&base, cfg)?;
    let mut out = String::new();
    header(&mut out, &base);
    let _ = writeln!(out, "ell: {}", base.hull_dimension());
    let strategy = match cfg.strategy {
        Strategy::Random => "random",
        Strategy::Exhaustive => "exhaustive",
    };
    let _ = writeln!(out, "strategy: {strategy}");
    let _ = writeln!(out, "seed: {}", cfg.seed);
    let _ = writeln!(out, "space: {}", rep.space);
    let _ = writeln!(out, "trials: {}", rep.trials);
    let _ = writeln!(out, "results: {}", rep.results.len());
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
    }
    for (i, r) in rep.results.iter().enumerate() {
        let d = r.distance.as_ref().and_then(|d| d.exact()).expect("search results carry exact distances");
        let digest = match r.code.fingerprint() {
            Ok(h) => h,
            Err(Error::EnumerationGuard { .. }) => "-".to_string(),
            Err(e) => return Err(e.into()),
        };
        let _ = writeln!(out, "result {}: d={} trial={} fingerprint={}", i + 1, d, r.trials_used, digest);
        if let Some(dir) = out_dir {
            let file = dir.join(format!("best_{:02}.txt", i + 1));
            let notes = vec![
                format!("rank {} d={} trial={} seed={}", i + 1, d, r.trials_used, cfg.seed),
                format!("fingerprint {digest}"),
            ];
            write(&file, &render_code(&r.code, &notes))?;
        }
    }
    Ok(Outcome::ok(out))
}

pub fn certify(path: &Path) -> CliResult<Outcome> {
    let c = load_code(path)?;
    let cert = certify_minimality(&c)?;
    let mut out = String::new();
    header(&mut out, &c);
    let _ = writeln!(out, "ell: {}", cert.ell);
    for (m, count) in &cert.checked {
        let _ = writeln!(out, "width {m}: {count} blocks checked");
    }
    let _ = writeln!(out, "minimal: {}", cert.holds());
    if let Some(block) = &cert.counterexample {
        let _ = writeln!(out, "counterexample:");
        out.push_str(&render_matrix(block, c.inner_product(), &[]));
        return Ok(Outcome { stdout: out, exit: EXIT_VERIFY_FAILED });
    }
    let _ = writeln!(out, "shortest_embedding_length: {}", c.n() + cert.ell);
    Ok(Outcome::ok(out))
}

pub fn verify_paper() -> Outcome {
    let reports = verify::check_all();
    let mut out = String::new();
    for r in &reports {
        out.push_str(&r.row());
        out.push('\n');
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    let _ = writeln!(out, "passed: {}/{}", reports.len() - failed.len(), reports.len());
    if failed.is_empty() {
        Outcome::ok(out)
    } else {
        let _ = writeln!(out, "failed: {}", failed.join(", "));
        Outcome { stdout: out, exit: EXIT_VERIFY_FAILED }
    }
}
