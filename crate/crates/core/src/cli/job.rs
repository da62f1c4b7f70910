//! JSON job files and reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::suites::{run_suites, SuiteOptions, DEFAULT_COUNT, DEFAULT_SEED};
use crate::chowcalc::{segre_class, ChowClass};
use crate::error::{Error, Result};
use crate::linecone::{descend_check, is_econe, normal_cone, t1_quotient, tangent_action, Cone};
use crate::symkernel::{Ideal, PolyRing};
use crate::vfclasses::{
    fixtures, fulton_class, vfc_closed_formula, vfc_direct, EmbeddedScheme, NormalSpaceData, NormalSpaceSpec,
    SchemeSpec,
};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Job {
    pub schema: u32,
    pub task: String,
    #[serde(default)]
    pub params: Value,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub task: String,
    pub status: &'static str,
    pub seed: u64,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub elapsed_ms: u128,
    /// One-line human summary (printed on stderr by the binary).
    #[serde(skip)]
    pub summary: String,
    #[serde(skip)]
    pub exit_code: i32,
}

fn from_params<T: serde::de::DeserializeOwned>(p: &Value) -> Result<T> {
    serde_json::from_value(p.clone()).map_err(|e| Error::invalid(format!("bad params: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NormalConeParams {
    vars: Vec<String>,
    ideal: Vec<String>,
    #[serde(default)]
    generators: Option<Vec<String>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

impl NormalConeParams {
    fn cone(&self) -> Result<Cone> {
        let ring = PolyRing::base(&self.vars)?;
        let ideal = Ideal::parse(ring.clone(), &self.ideal)?;
        let f = match &self.generators {
            Some(g) => g.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?,
            None => ideal.gens().to_vec(),
        };
        normal_cone(&ideal, &f, self.names.clone())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeParams {
    #[serde(default)]
    fixture: Option<String>,
    #[serde(default)]
    scheme: Option<SchemeSpec>,
    #[serde(default)]
    normal_space: Option<NormalSpaceSpec>,
    #[serde(default)]
    method: Option<String>,
}

impl SchemeParams {
    fn scheme(&self) -> Result<(EmbeddedScheme, Option<NormalSpaceData>)> {
        match (&self.fixture, &self.scheme) {
            (Some(name), None) => {
                let fx = fixtures::fixture(name)?;
                let x = fx.scheme.build()?;
                let spec = self.normal_space.as_ref().unwrap_or(&fx.normal_space);
                let d = spec.build(&x)?;
                Ok((x, Some(d)))
            }
            (None, Some(s)) => {
                let x = s.build()?;
                let d = self.normal_space.as_ref().map(|n| n.build(&x)).transpose()?;
                Ok((x, d))
            }
            _ => Err(Error::invalid("give exactly one of `fixture` and `scheme`")),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeOpParams {
    op: String,
    #[serde(flatten)]
    cone: NormalConeParams,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckParams {
    #[serde(default)]
    suites: Vec<String>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    count: Option<u64>,
    #[serde(default)]
    instance: Option<u64>,
    #[serde(default)]
    mutate: bool,
    #[serde(default)]
    dump_dir: Option<String>,
}

fn class_value(c: &ChowClass) -> Value {
    json!({"class": c, "display": c.to_string()})
}

struct TaskOutput {
    result: Value,
    summary: String,
    /// Set when the task ran to completion but its checks failed.
    failure: Option<Error>,
}

fn done(result: Value, summary: String) -> Result<TaskOutput> {
    Ok(TaskOutput {
        result,
        summary,
        failure: None,
    })
}

fn run_task(job: &Job, seed: u64) -> Result<TaskOutput> {
    let p = &job.params;
    match job.task.as_str() {
        "normal-cone" => {
            let c = from_params::<NormalConeParams>(p)?.cone()?;
            let coords: Vec<&str> = c.space.coords.iter().map(|v| v.name.as_str()).collect();
            let gens = c.canonical_strings();
            let summary = format!("normal cone in {} coordinates, {} generators", coords.len(), gens.len());
            done(
                json!({"coords": coords, "twists": c.space.twists(), "ideal": gens, "dimension": c.dimension()}),
                summary,
            )
        }
        "segre" | "fulton" => {
            let (x, _) = from_params::<SchemeParams>(p)?.scheme()?;
            let c = if job.task == "segre" {
                if x.generators.is_empty() {
                    ChowClass::linear(x.n(), x.n(), 1)
                } else {
                    segre_class(&normal_cone(&x.ideal, &x.generators, None)?, seed)?
                }
            } else {
                fulton_class(&x, seed)?
            };
            done(class_value(&c), format!("{} = {c}", job.task))
        }
        "vfc" => {
            let params = from_params::<SchemeParams>(p)?;
            let (x, d) = params.scheme()?;
            let d = d.ok_or_else(|| Error::invalid("vfc needs `normal_space` or a fixture"))?;
            let method = params.method.as_deref().unwrap_or("both");
            let (r, closed) = match method {
                "direct" => (vfc_direct(&x, &d, seed)?, None),
                "closed" => (vfc_closed_formula(&x, &d, seed)?, None),
                "both" => {
                    let a = vfc_direct(&x, &d, seed)?;
                    let b = vfc_closed_formula(&x, &d, seed)?;
                    if a.vfc != b.vfc {
                        return Err(Error::assertion(format!(
                            "direct class {} differs from the closed formula {}",
                            a.vfc, b.vfc
                        )));
                    }
                    (a, Some(b.vfc))
                }
                other => return Err(Error::invalid(format!("unknown method `{other}`"))),
            };
            let summary = format!("vfc = {} (virtual dimension {})", r.vfc, r.rank);
            let mut v = serde_json::to_value(&r).unwrap();
            v["display"] = json!(r.vfc.to_string());
            if let Some(c) = closed {
                v["closed_formula"] = serde_json::to_value(&c).unwrap();
            }
            done(v, summary)
        }
        "cone-op" => {
            let params = from_params::<ConeOpParams>(p)?;
            let c = params.cone.cone()?;
            match params.op.as_str() {
                "is-econe-tangent" => {
                    let b = is_econe(&tangent_action(&c)?)?;
                    done(json!({"is_econe": b}), format!("tangent action preserves the cone: {b}"))
                }
                "descend-t1" => {
                    let (kernel, q) = t1_quotient(&c)?;
                    let d = descend_check(&q, &c)?;
                    let r = c.space.base_ring();
                    let kernel: Vec<Vec<String>> =
                        kernel.iter().map(|v| v.iter().map(|p| r.format(p)).collect()).collect();
                    done(
                        json!({
                            "descends": d.descends,
                            "kernel": kernel,
                            "candidate": d.candidate.canonical_strings(),
                        }),
                        format!("cone descends to T1: {}", d.descends),
                    )
                }
                other => Err(Error::invalid(format!("unknown cone op `{other}`"))),
            }
        }
        "check" => {
            let cp = from_params::<CheckParams>(p)?;
            let opts = SuiteOptions {
                seed: cp.seed.unwrap_or(seed),
                count: cp.count.unwrap_or(DEFAULT_COUNT),
                instance: cp.instance,
                mutate: cp.mutate,
                dump_dir: cp.dump_dir.map(Into::into),
            };
            let out = run_suites(&cp.suites, &opts)?;
            let failed: u64 = out.iter().map(|o| o.total - o.passed).sum();
            let summary = out
                .iter()
                .map(|o| format!("{}: {}/{}", o.suite, o.passed, o.total))
                .collect::<Vec<_>>()
                .join(", ");
            let v = json!({"suites": out});
            if failed > 0 {
                let e = Error::assertion(format!("{failed} law instance(s) failed: {summary}"));
                return Ok(TaskOutput {
                    result: v,
                    summary: e.to_string(),
                    failure: Some(e),
                });
            }
            done(v, summary)
        }
        other => Err(Error::invalid(format!("unknown task `{other}`"))),
    }
}

/// Runs a job; failures become error reports carrying the exit code.
pub fn run_job(job: &Job, seed_override: Option<u64>) -> Report {
    let start = Instant::now();
    let seed = seed_override.or(job.seed).unwrap_or(match job.task.as_str() {
        "check" => DEFAULT_SEED,
        _ => crate::chowcalc::segre::DEFAULT_SEED,
    });
    let outcome = if job.schema != SCHEMA {
        Err(Error::invalid(format!("unsupported schema {} (expected {SCHEMA})", job.schema)))
    } else {
        run_task(job, seed)
    };
    let elapsed_ms = start.elapsed().as_millis();
    let (result, summary, failure) = match outcome {
        Ok(t) => (t.result, t.summary, t.failure),
        Err(e) => (Value::Null, e.to_string(), Some(e)),
    };
    Report {
        schema: SCHEMA,
        task: job.task.clone(),
        status: if failure.is_some() { "error" } else { "ok" },
        seed,
        result,
        error: failure.as_ref().map(|e| ErrorReport {
            kind: e.kind(),
            message: e.to_string(),
        }),
        elapsed_ms,
        summary,
        exit_code: failure.map_or(0, |e| e.exit_code()),
    }
}

/// Parses a job file's contents.
pub fn parse_job(text: &str) -> Result<Job> {
    serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad job file: {e}")))
}
