use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use dskit::balanced::{
    flag_entries, flag_f, flag_h, parse_colors, validate_balanced, verify_colored, write_colors, Coloring,
};
use dskit::complex::DEFAULT_MAX_FACES;
use dskit::enumeration::{f_vector, h_vector, interior_f_vector, multiplicities, summarize};
use dskit::generators::{barycentric_subdivision, generate, Family};
use dskit::homology::{manifold_verdict, reduced_betti};
use dskit::relations::{classify_with, verify, RelationId, RelationReport};
use dskit::stanley_reisner::{colored_hilbert_series, hilbert_series};
use dskit::{Complex, Error};

use crate::{Cli, Command, Global, Input};

/// A failure that ends the run with a non-zero exit code other than 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
    Precondition { message: String, witness: Option<Vec<u32>> },
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Precondition { .. } => 4,
        }
    }

    pub fn report(&self, as_json: bool) {
        let (kind, message, witness) = match self {
            Failure::Usage(m) => ("usage", m, None),
            Failure::Input(m) => ("input", m, None),
            Failure::Precondition { message, witness } => ("precondition", message, witness.as_ref()),
        };
        if as_json {
            let body = json!({ "error": kind, "message": message, "witness": witness });
            println!("{body}");
        }
        eprintln!("error: {message}");
        if let Some(w) = witness {
            eprintln!("witness: {}", join(w));
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::Parse { .. } | Error::InvalidVertex(_) => Failure::Input(message),
            Error::NotReciprocal { .. }
            | Error::NotSemiEulerian { .. }
            | Error::NotHomologyManifold { .. }
            | Error::UncoloredVertex(_)
            | Error::InvalidColor { .. }
            | Error::Unbalanced { .. } => Failure::Precondition {
                witness: e.witness().map(<[u32]>::to_vec),
                message,
            },
            _ => Failure::Usage(message),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn strings(items: &[BigInt]) -> Vec<String> {
    items.iter().map(BigInt::to_string).collect()
}

fn face_text(face: &[u32]) -> String {
    format!("{{{}}}", face.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn load_complex(g: &Global, input: &Input) -> Result<Complex, Failure> {
    let text = read_text(input.file.as_deref())?;
    Ok(Complex::parse_with_limit(&text, g.max_faces.unwrap_or(DEFAULT_MAX_FACES))?)
}

fn load_coloring(path: &Path, complex: &Complex) -> Result<Coloring, Failure> {
    let text = read_text(Some(path))?;
    Ok(validate_balanced(complex, &parse_colors(&text)?)?)
}

fn emit(g: &Global, text: &str) -> Result<(), Failure> {
    match &g.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Usage(format!("cannot write stdout: {e}")))
        }
    }
}

fn emit_json<T: Serialize>(g: &Global, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    emit(g, &format!("{text}\n"))
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::FVector(input) => {
            let f = f_vector(&load_complex(g, input)?);
            if g.json {
                emit_json(g, &json!({ "f": strings(f.entries()) }))?;
            } else {
                emit(g, &format!("{}\n", join(f.entries())))?;
            }
            Ok(0)
        }
        Command::HVector(input) => {
            let h = h_vector(&f_vector(&load_complex(g, input)?));
            if g.json {
                emit_json(g, &json!({ "h": strings(h.entries()) }))?;
            } else {
                emit(g, &format!("{}\n", join(h.entries())))?;
            }
            Ok(0)
        }
        Command::Multiplicities(input) => {
            let summary = summarize(&load_complex(g, input)?);
            if g.json {
                emit_json(g, &summary.m)?;
            } else {
                let mut s = String::new();
                for fm in &summary.m {
                    writeln!(s, "{} {}", face_text(&fm.face), fm.m).unwrap();
                }
                emit(g, &s)?;
            }
            Ok(0)
        }
        Command::Interior(input) => {
            let c = load_complex(g, input)?;
            let f_int = interior_f_vector(&c, &multiplicities(&c))?;
            if g.json {
                emit_json(g, &json!({ "f_int": strings(f_int.entries()) }))?;
            } else {
                emit(g, &format!("{}\n", join(f_int.entries())))?;
            }
            Ok(0)
        }
        Command::Classify(input) => {
            let c = load_complex(g, input)?;
            let cls = classify_with(&c, &multiplicities(&c), g.field);
            if g.json {
                emit_json(g, &cls)?;
            } else {
                let mut s = String::new();
                let mut line = |name: &str, value: bool, witness: Option<String>| {
                    match witness {
                        Some(w) if !value => writeln!(s, "{name}: false ({w})"),
                        _ => writeln!(s, "{name}: {value}"),
                    }
                    .unwrap()
                };
                let fw = |w: &Option<dskit::relations::FaceWitness>| {
                    w.as_ref().map(|w| format!("face {} has m = {}", face_text(&w.face), w.m))
                };
                line("reciprocal", cls.reciprocal, fw(&cls.reciprocal_witness));
                line("semi-eulerian", cls.semi_eulerian, fw(&cls.semi_eulerian_witness));
                line("eulerian", cls.eulerian, fw(&cls.eulerian_witness));
                line(
                    &format!("homology-manifold over {}", cls.field),
                    cls.homology_manifold,
                    cls.homology_manifold_witness
                        .as_ref()
                        .map(|w| format!("link of {} has reduced betti {}", face_text(&w.face), join(&w.betti))),
                );
                emit(g, &s)?;
            }
            Ok(0)
        }
        Command::Betti(input) => {
            let c = load_complex(g, input)?;
            let betti = reduced_betti(&c, g.field);
            let verdict = manifold_verdict(&c, g.field);
            if g.json {
                emit_json(
                    g,
                    &json!({ "field": g.field.to_string(), "betti": betti.values(), "verdict": verdict }),
                )?;
            } else {
                let mut s = format!("{}\n", join(betti.values()));
                writeln!(s, "homology-manifold: {}", verdict.homology_manifold).unwrap();
                if let (Some(w), Some(b)) = (&verdict.witness, &verdict.witness_betti) {
                    writeln!(s, "witness: {} (link reduced betti {})", face_text(w), join(b)).unwrap();
                }
                if verdict.homology_manifold {
                    let faces: Vec<String> = verdict.boundary_faces.iter().map(|f| face_text(f)).collect();
                    writeln!(s, "boundary: {}", faces.join(" ")).unwrap();
                    if let Some(closed) = verdict.boundary_is_subcomplex {
                        writeln!(s, "boundary-is-subcomplex: {closed}").unwrap();
                    }
                }
                emit(g, &s)?;
            }
            Ok(0)
        }
        Command::Verify { relation, input } => {
            let c = load_complex(g, input)?;
            let coloring = g.colors.as_deref().map(|p| load_coloring(p, &c)).transpose()?;
            let (reports, skipped) = if relation == "all" {
                run_all(&c, coloring.as_ref())?
            } else {
                let id = RelationId::parse(relation)
                    .ok_or_else(|| Failure::Usage(format!("unknown relation {relation:?}")))?;
                let report = if id.is_colored() {
                    let k = coloring
                        .as_ref()
                        .ok_or_else(|| Failure::Usage(format!("relation {id} needs --colors")))?;
                    verify_colored(&c, k, id)?
                } else {
                    verify(&c, id)?
                };
                (vec![report], Vec::new())
            };
            let all_hold = reports.iter().all(|r| r.holds);
            if g.json {
                emit_json(g, &reports)?;
            } else {
                let mut s: String = reports.iter().map(ToString::to_string).collect();
                for (id, why) in &skipped {
                    writeln!(s, "{id}: not applicable ({why})").unwrap();
                }
                emit(g, &s)?;
            }
            Ok(if all_hold { 0 } else { 1 })
        }
        Command::Flag(input) => {
            let c = load_complex(g, input)?;
            let path = g.colors.as_deref().ok_or_else(|| Failure::Usage("flag needs --colors".into()))?;
            let k = load_coloring(path, &c)?;
            let entries = flag_entries(&flag_f(&c, &k), &flag_h(&c, &k));
            if g.json {
                emit_json(g, &entries)?;
            } else {
                let mut s = format!("# type {}\n# b f h\n", join(k.a()));
                for e in &entries {
                    writeln!(s, "{} {} {}", face_text(&e.b), e.f, e.h).unwrap();
                }
                emit(g, &s)?;
            }
            Ok(0)
        }
        Command::Hilbert(input) => {
            let c = load_complex(g, input)?;
            match g.colors.as_deref() {
                None => {
                    let series = hilbert_series(&c);
                    let coeffs = strings(series.numerator.coeffs());
                    if g.json {
                        emit_json(
                            g,
                            &json!({ "numerator": coeffs, "denominator_exponent": series.denominator_exponent }),
                        )?;
                    } else {
                        emit(
                            g,
                            &format!(
                                "numerator: {}\ndenominator-exponent: {}\n",
                                coeffs.join(" "),
                                series.denominator_exponent
                            ),
                        )?;
                    }
                }
                Some(path) => {
                    let k = load_coloring(path, &c)?;
                    let series = colored_hilbert_series(&c, &k);
                    let terms: Vec<_> = series
                        .numerator
                        .terms()
                        .map(|(b, v)| json!({ "b": b, "c": v.to_string() }))
                        .collect();
                    if g.json {
                        emit_json(g, &json!({ "numerator": terms, "denominator": series.denominator }))?;
                    } else {
                        let mut s = String::new();
                        for (b, v) in series.numerator.terms() {
                            writeln!(s, "numerator {} {v}", face_text(b)).unwrap();
                        }
                        writeln!(s, "denominator-exponents: {}", join(&series.denominator)).unwrap();
                        emit(g, &s)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Gen {
            family,
            params,
            colors_out,
        } => {
            let (complex, colors) = if family == "barycentric-subdivision" {
                if params.len() > 1 {
                    return Err(Failure::Usage("barycentric-subdivision takes at most one FILE".into()));
                }
                let input = Input {
                    file: params.first().map(PathBuf::from),
                };
                let (c, k) = barycentric_subdivision(&load_complex(g, &input)?)?;
                (c, Some(k))
            } else {
                let generated = generate(&Family::parse(family, params)?)?;
                (generated.complex, generated.colors)
            };
            if let Some(path) = colors_out {
                let colors = colors.ok_or_else(|| Failure::Usage(format!("{family} has no canonical coloring")))?;
                let pairs: Vec<(u32, u32)> = colors.into_iter().collect();
                fs::write(path, write_colors(&pairs))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            emit(g, &complex.to_cplx())?;
            Ok(0)
        }
        Command::Batch { dir } => batch(g, dir),
    }
}

type Skipped = Vec<(RelationId, String)>;

/// Every relation whose preconditions hold; the rest are listed with the
/// reason they were skipped.
fn run_all(c: &Complex, coloring: Option<&Coloring>) -> Result<(Vec<RelationReport>, Skipped), Failure> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut take = |id: RelationId, r: dskit::Result<RelationReport>| -> Result<(), Failure> {
        match r {
            Ok(report) => reports.push(report),
            Err(e @ (Error::NotReciprocal { .. } | Error::NotSemiEulerian { .. })) => skipped.push((id, e.to_string())),
            Err(e) => return Err(e.into()),
        }
        Ok(())
    };
    for id in RelationId::UNIVARIATE {
        take(id, verify(c, id))?;
    }
    if let Some(k) = coloring {
        for id in RelationId::COLORED {
            take(id, verify_colored(c, k, id))?;
        }
    }
    Ok((reports, skipped))
}

#[derive(Serialize)]
struct BatchEntry {
    file: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    reports: Vec<RelationReport>,
    skipped: BTreeMap<String, String>,
}

fn batch_one(g: &Global, path: &Path) -> (BatchEntry, Option<Failure>) {
    let file = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let result = (|| {
        let c = load_complex(g, &Input { file: Some(path.to_path_buf()) })?;
        let sidecar = path.with_extension("colors");
        let coloring = if sidecar.exists() {
            Some(load_coloring(&sidecar, &c)?)
        } else {
            None
        };
        let (reports, skipped) = run_all(&c, coloring.as_ref())?;
        Ok::<_, Failure>((c.d(), reports, skipped))
    })();
    match result {
        Ok((d, reports, skipped)) => {
            let status = if reports.iter().all(|r| r.holds) { "ok" } else { "fail" };
            let entry = BatchEntry {
                file,
                status,
                d: Some(d),
                error: None,
                reports,
                skipped: skipped.into_iter().map(|(id, why)| (id.to_string(), why)).collect(),
            };
            (entry, None)
        }
        Err(failure) => {
            let message = match &failure {
                Failure::Usage(m) | Failure::Input(m) | Failure::Precondition { message: m, .. } => m.clone(),
            };
            let entry = BatchEntry {
                file,
                status: "error",
                d: None,
                error: Some(message),
                reports: Vec::new(),
                skipped: BTreeMap::new(),
            };
            (entry, Some(failure))
        }
    }
}

fn batch(g: &Global, dir: &Path) -> Outcome {
    let listing = fs::read_dir(dir).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = listing
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cplx") && p.is_file())
        .collect();
    files.sort();
    let results: Vec<(BatchEntry, Option<Failure>)> = files.par_iter().map(|p| batch_one(g, p)).collect();

    let worst = results
        .iter()
        .filter_map(|(_, f)| f.as_ref().map(Failure::code))
        .max();
    let any_fail = results.iter().any(|(e, _)| e.status == "fail");

    let entries: Vec<&BatchEntry> = results.iter().map(|(e, _)| e).collect();
    if g.json {
        emit_json(g, &entries)?;
    } else {
        let width = entries.iter().map(|e| e.file.len()).max().unwrap_or(4).max(4);
        let mut s = format!("{:width$}  {:>3}  {:>4}  {:>6}  {:>7}  status\n", "file", "d", "held", "failed", "skipped");
        for e in &entries {
            let held = e.reports.iter().filter(|r| r.holds).count();
            let failed: Vec<String> = e.reports.iter().filter(|r| !r.holds).map(|r| r.relation.to_string()).collect();
            let d = e.d.map_or("-".to_string(), |d| d.to_string());
            write!(s, "{:width$}  {d:>3}  {held:>4}  {:>6}  {:>7}  {}", e.file, failed.len(), e.skipped.len(), e.status)
                .unwrap();
            if let Some(err) = &e.error {
                write!(s, " ({err})").unwrap();
            } else if !failed.is_empty() {
                write!(s, " ({})", failed.join(", ")).unwrap();
            }
            s.push('\n');
        }
        emit(g, &s)?;
    }
    Ok(match worst {
        Some(code) => code,
        None if any_fail => 1,
        None => 0,
    })
}
