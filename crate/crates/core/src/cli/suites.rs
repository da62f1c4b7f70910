//! Seeded property suites for the transfer laws of cones along complexes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linecone::random::{random_base, random_complex, random_econe, random_homotopy, random_square, SquareKind};
use crate::linecone::{
    complex_diagnostics, going_down, going_down_certified, going_down_derived, going_up, ComplexSquare, Cone,
    DerivedMorphism,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_COUNT: u64 = 100;

pub const SUITES: &[&str] = &[
    "going-up-homotopy",
    "going-down-homotopy",
    "going-up-functoriality",
    "going-down-functoriality",
    "left-inverse",
    "quasi-iso-roundtrip",
    "exact-sequence",
    "ass-exact-sequence",
];

/// Deterministic per-instance seed (FNV-1a over the identifying data).
pub fn instance_seed(seed: u64, suite: &str, index: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in seed.to_le_bytes().iter().chain(suite.as_bytes()).chain(index.to_le_bytes().iter()) {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Adds a coordinate to the cone ideal; used to check that the suites detect broken laws.
fn corrupt(c: &Cone) -> Result<Cone> {
    let mut gens = c.ideal.gens().to_vec();
    if c.space.rank() > 0 {
        gens.push(c.space.coord(0));
    } else {
        gens.push(crate::symkernel::Poly::one(c.ring().nvars()));
    }
    Cone::new(c.space.clone(), gens)
}

fn agree(lhs: &Cone, rhs: &Cone, mutate: bool, what: &str) -> Result<()> {
    let rhs = if mutate { corrupt(rhs)? } else { rhs.clone() };
    if lhs.equals(&rhs) {
        Ok(())
    } else {
        Err(Error::assertion(format!("{what}: ideals differ")))
    }
}

/// Runs one law instance; `Ok(())` means the law held.
pub fn run_instance(suite: &str, seed: u64, index: u64, mutate: bool) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(seed, suite, index));
    let base = random_base(&mut rng);
    let e = random_complex(&mut rng, &base, 0)?;
    match suite {
        "going-up-homotopy" => {
            let kind = if rand::Rng::gen_bool(&mut rng, 0.5) { SquareKind::Scaled } else { SquareKind::Applicable };
            let (sq, _) = random_square(&mut rng, &e, kind, 1)?;
            let k = random_homotopy(&mut rng, &sq)?;
            let c = random_econe(&mut rng, &sq.target)?;
            let a = going_up(&sq, &c)?;
            let b = going_up(&sq.homotopic(&k)?, &c)?;
            agree(&a, &b, mutate, "going up along homotopic squares")
        }
        "going-down-homotopy" => {
            let (sq, _) = random_square(&mut rng, &e, SquareKind::Applicable, 1)?;
            let k = random_homotopy(&mut rng, &sq)?;
            let c = random_econe(&mut rng, &sq.source)?;
            let a = going_down(&sq, &c)?;
            let b = going_down(&sq.homotopic(&k)?, &c)?;
            agree(&a, &b, mutate, "going down along homotopic squares")
        }
        "going-up-functoriality" => {
            let (phi, _) = random_square(&mut rng, &e, SquareKind::Scaled, 1)?;
            let (psi, _) = random_square(&mut rng, &phi.source, SquareKind::Applicable, 2)?;
            let c = random_econe(&mut rng, &e)?;
            let a = going_up(&psi.then(&phi)?, &c)?;
            let b = going_up(&psi, &going_up(&phi, &c)?)?;
            agree(&a, &b, mutate, "going up along a composite")
        }
        "going-down-functoriality" => {
            let (phi, _) = random_square(&mut rng, &e, SquareKind::Applicable, 1)?;
            let (psi, _) = random_square(&mut rng, &phi.source, SquareKind::Applicable, 2)?;
            let c = random_econe(&mut rng, &psi.source)?;
            let a = going_down(&psi.then(&phi)?, &c)?;
            let b = going_down(&phi, &going_down(&psi, &c)?)?;
            agree(&a, &b, mutate, "going down along a composite")
        }
        "left-inverse" => {
            let (sq, _) = random_square(&mut rng, &e, SquareKind::Applicable, 1)?;
            let c = random_econe(&mut rng, &sq.source)?;
            let back = going_up(&sq, &going_down(&sq, &c)?)?;
            agree(&back, &c, mutate, "going up after going down")
        }
        "quasi-iso-roundtrip" => {
            let (sq, _) = random_square(&mut rng, &e, SquareKind::QuasiIso, 1)?;
            let c = random_econe(&mut rng, &sq.source)?;
            let c2 = random_econe(&mut rng, &sq.target)?;
            agree(&going_up(&sq, &going_down(&sq, &c)?)?, &c, mutate, "up after down")?;
            agree(&going_down(&sq, &going_up(&sq, &c2)?)?, &c2, mutate, "down after up")?;
            // the derived construction with the identity roof agrees with plain going down
            let dm = DerivedMorphism::new(ComplexSquare::identity(&sq.target), sq.clone())?;
            agree(&going_down_derived(&dm, &c)?, &going_down(&sq, &c)?, mutate, "derived going down")
        }
        "exact-sequence" => {
            let (sq, _) = random_square(&mut rng, &e, SquareKind::Applicable, 1)?;
            let c = random_econe(&mut rng, &sq.source)?;
            let out = going_down_certified(&sq, &c)?;
            if out.certificate != mutate {
                Ok(())
            } else {
                Err(Error::assertion("q^-1 of the pushforward differs from E0 + C"))
            }
        }
        "ass-exact-sequence" => {
            let kind = [SquareKind::QuasiIso, SquareKind::Applicable, SquareKind::Scaled][rand::Rng::gen_range(&mut rng, 0..3)];
            let (sq, exp) = random_square(&mut rng, &e, kind, 1)?;
            // complex_diagnostics itself asserts the exactness/cohomology equivalences
            let d = complex_diagnostics(&sq)?;
            let mut ok = match kind {
                SquareKind::QuasiIso => d.is_quasi_iso() && d.exact_f0 && d.exact_mid && d.exact_em1,
                SquareKind::Applicable => d.h0_iso && d.hm1_surj && d.hm1_inj == !exp.killed_kernel,
                SquareKind::Scaled => true,
            };
            if mutate {
                ok = !ok;
            }
            if ok {
                Ok(())
            } else {
                Err(Error::assertion(format!("unexpected flags {d:?} for {kind:?}")))
            }
        }
        other => Err(Error::invalid(format!("unknown suite `{other}`"))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub index: u64,
    pub message: String,
    /// A check job that replays exactly this instance.
    pub replay: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub passed: u64,
    pub total: u64,
    pub failures: Vec<Failure>,
}

pub fn replay_job(suite: &str, seed: u64, index: u64) -> serde_json::Value {
    serde_json::json!({
        "schema": 1,
        "task": "check",
        "params": {"suites": [suite], "seed": seed, "instance": index, "count": 1}
    })
}

/// Options for [`run_suites`].
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub count: u64,
    /// Runs only this instance index.
    pub instance: Option<u64>,
    pub mutate: bool,
    /// Directory for replay files of failing instances.
    pub dump_dir: Option<std::path::PathBuf>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            count: DEFAULT_COUNT,
            instance: None,
            mutate: false,
            dump_dir: None,
        }
    }
}

pub fn run_suites(selection: &[String], opts: &SuiteOptions) -> Result<Vec<SuiteOutcome>> {
    let names: Vec<String> = if selection.is_empty() {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        selection.to_vec()
    };
    for n in &names {
        if !SUITES.contains(&n.as_str()) {
            return Err(Error::invalid(format!("unknown suite `{n}`")));
        }
    }
    let mut out = Vec::new();
    for name in names {
        let indices: Vec<u64> = match opts.instance {
            Some(i) => vec![i],
            None => (0..opts.count).collect(),
        };
        let results: Vec<(u64, Result<()>)> = indices
            .par_iter()
            .map(|&i| (i, run_instance(&name, opts.seed, i, opts.mutate)))
            .collect();
        let mut failures = Vec::new();
        let mut passed = 0;
        for (i, r) in results {
            match r {
                Ok(()) => passed += 1,
                Err(e) => {
                    let replay = replay_job(&name, opts.seed, i);
                    let dump = match &opts.dump_dir {
                        Some(dir) => {
                            std::fs::create_dir_all(dir).map_err(|e| Error::invalid(e.to_string()))?;
                            let path = dir.join(format!("replay-{name}-{}-{i}.json", opts.seed));
                            std::fs::write(&path, serde_json::to_string_pretty(&replay).unwrap())
                                .map_err(|e| Error::invalid(e.to_string()))?;
                            Some(path.display().to_string())
                        }
                        None => None,
                    };
                    failures.push(Failure {
                        index: i,
                        message: e.to_string(),
                        replay,
                        dump,
                    });
                }
            }
        }
        out.push(SuiteOutcome {
            suite: name,
            passed,
            total: indices.len() as u64,
            failures,
        });
    }
    Ok(out)
}
