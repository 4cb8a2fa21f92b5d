//! Dimension measurements at generic samples.
//!
//! Joins, secants, spans and vertices are computed from tangent spaces at
//! random integer parameters. Computed ranks can only undershoot the generic
//! value on special samples, never overshoot it, so every measurement runs
//! several independent trials and accepts the maximum once it has appeared
//! at least twice, escalating the trial count before giving up.
//!
//! Every operation derives its own RNG stream from the global seed, an
//! operation tag and the labels of the varieties involved, so results are
//! reproducible regardless of the order in which operations run.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::map::{ParamPoint, PolyMap};
use crate::linalg::ProjSubspace;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub struct GenericityConfig {
    pub seed: u64,
    /// Trials in the first round.
    pub trials: usize,
    /// Total trials after escalation.
    pub escalation_trials: usize,
    /// Resampling budget for base-locus or singular samples, per sample.
    pub retry_cap: usize,
}

impl GenericityConfig {
    pub fn new(seed: u64) -> Self {
        GenericityConfig {
            seed,
            trials: 3,
            escalation_trials: 7,
            retry_cap: 20,
        }
    }

    /// Trial counts below 2 defeat the agreement check, so they are clamped.
    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials.max(2);
        self.escalation_trials = self.escalation_trials.max(2 * self.trials + 1);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimResult {
    pub value: i64,
    /// How many trials attained the accepted value.
    pub attained_count: usize,
    pub trials_run: usize,
}

/// Derives a deterministic RNG for one operation. FNV-1a over the seed, the
/// operation tag and the participating labels; label order matters, so
/// callers pass labels in argument order.
pub fn derive_rng(seed: u64, tag: &str, labels: &[&str]) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let eat = |h: &mut u64, bytes: &[u8]| {
        for &b in bytes {
            *h ^= b as u64;
            *h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(&mut h, &seed.to_le_bytes());
    eat(&mut h, tag.as_bytes());
    eat(&mut h, &[0]);
    for l in labels {
        eat(&mut h, l.as_bytes());
        eat(&mut h, &[0]);
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// Samples a parameter until the tangent space has full expected rank.
fn sample_tangent<F: Field>(
    f: &F,
    v: &PolyMap,
    rng: &mut ChaCha8Rng,
    retry_cap: usize,
) -> Result<(ParamPoint, ProjSubspace<F>)> {
    for _ in 0..retry_cap.max(1) {
        let p = v.random_param(rng);
        match v.tangent_space(f, &p) {
            Ok(t) => return Ok((p, t)),
            Err(Error::BasePoint(_)) | Err(Error::SingularSample { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "`{}`: no smooth generic sample within {} attempts",
        v.label(),
        retry_cap
    )))
}

/// Runs trials until the maximum value has been attained at least twice,
/// escalating once. Semicontinuity makes the maximum the best estimate.
fn run_dim_trials(
    cfg: &GenericityConfig,
    rng: &mut ChaCha8Rng,
    what: &str,
    mut trial: impl FnMut(&mut ChaCha8Rng) -> Result<i64>,
) -> Result<DimResult> {
    let mut values: Vec<i64> = Vec::new();
    for round in [cfg.trials, cfg.escalation_trials.max(cfg.trials + 1)] {
        while values.len() < round {
            values.push(trial(rng)?);
        }
        let max = *values.iter().max().expect("at least one trial");
        let count = values.iter().filter(|&&v| v == max).count();
        if count >= 2 {
            return Ok(DimResult {
                value: max,
                attained_count: count,
                trials_run: values.len(),
            });
        }
    }
    let max = *values.iter().max().expect("at least one trial");
    Err(Error::Genericity(format!(
        "{what}: dimension {max} attained only once in {} trials",
        values.len()
    )))
}

fn join_inner<F: Field>(
    f: &F,
    a: &PolyMap,
    b: &PolyMap,
    cfg: &GenericityConfig,
    tag: &str,
) -> Result<DimResult> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::AmbientMismatch(a.ambient_dim(), b.ambient_dim()));
    }
    let mut rng = derive_rng(cfg.seed, tag, &[a.label(), b.label()]);
    let what = format!("{tag}({}, {})", a.label(), b.label());
    run_dim_trials(cfg, &mut rng, &what, |rng| {
        let (p, ta) = sample_tangent(f, a, rng, cfg.retry_cap)?;
        let pa = a.evaluate(f, &p)?;
        // The two sample points must be distinct, otherwise the pair sees a
        // tangent space instead of a chord.
        for _ in 0..cfg.retry_cap.max(1) {
            let (q, tb) = sample_tangent(f, b, rng, cfg.retry_cap)?;
            let pb = b.evaluate(f, &q)?;
            if !ProjSubspace::points_equal(f, &pa, &pb) {
                return Ok(ta.span2(&tb)?.dim());
            }
        }
        Err(Error::Genericity(format!(
            "{what}: could not find distinct sample points"
        )))
    })
}

/// Dimension of the join of two varieties: the closure of the union of
/// lines through one point of each. Measured as the span of two generic
/// tangent spaces.
pub fn join_dimension<F: Field>(
    f: &F,
    a: &PolyMap,
    b: &PolyMap,
    cfg: &GenericityConfig,
) -> Result<DimResult> {
    join_inner(f, a, b, cfg, "join")
}

/// Dimension of the secant variety, the join of a variety with itself.
pub fn secant_dimension<F: Field>(
    f: &F,
    v: &PolyMap,
    cfg: &GenericityConfig,
) -> Result<DimResult> {
    join_inner(f, v, v, cfg, "secant")
}

/// Linear span of the image, grown by whole tangent spaces at fresh generic
/// points until two consecutive additions change nothing. Tangent spaces
/// lie inside the span and carry dim + 1 directions per sample, so the
/// accumulation both converges quickly and reuses the smoothness check.
pub fn span_subspace<F: Field>(
    f: &F,
    v: &PolyMap,
    cfg: &GenericityConfig,
) -> Result<ProjSubspace<F>> {
    let mut rng = derive_rng(cfg.seed, "span", &[v.label()]);
    let mut span = ProjSubspace::empty(f.clone(), v.ambient_dim());
    let mut stable = 0usize;
    let cap = v.ambient_dim() + 3 + cfg.retry_cap;
    for _ in 0..cap {
        let (_, t) = sample_tangent(f, v, &mut rng, cfg.retry_cap)?;
        let grown = span.span2(&t)?;
        if grown.rank() == span.rank() {
            stable += 1;
            if stable >= 2 {
                return Ok(span);
            }
        } else {
            stable = 0;
            span = grown;
        }
    }
    Err(Error::Genericity(format!(
        "span({}): did not stabilize within {cap} samples",
        v.label()
    )))
}

pub fn span_dim<F: Field>(f: &F, v: &PolyMap, cfg: &GenericityConfig) -> Result<i64> {
    Ok(span_subspace(f, v, cfg)?.dim())
}

/// Vertex of a variety: the intersection of all its embedded tangent
/// spaces, the locus of cone apexes. At least four tangent spaces are
/// intersected, stability is required twice in a row, and five extra
/// tangent spaces then re-verify the candidate.
pub fn vertex<F: Field>(f: &F, v: &PolyMap, cfg: &GenericityConfig) -> Result<ProjSubspace<F>> {
    let mut rng = derive_rng(cfg.seed, "vertex", &[v.label()]);
    let mut cur: Option<ProjSubspace<F>> = None;
    let mut stable = 0usize;
    let mut used = 0usize;
    let cap = 4 + 2 * (v.ambient_dim() + 1) + cfg.retry_cap + 5;
    while used < cap {
        let (_, t) = sample_tangent(f, v, &mut rng, cfg.retry_cap)?;
        used += 1;
        cur = Some(match cur.take() {
            None => t,
            Some(c) => {
                let i = c.intersect(&t)?;
                if i.rank() == c.rank() {
                    stable += 1;
                } else {
                    stable = 0;
                }
                i
            }
        });
        let candidate = cur.as_ref().expect("just set");
        if used >= 4 && (stable >= 2 || candidate.is_empty()) {
            // Verification pass: five more tangent spaces must all contain
            // the candidate. A shrink sends us back to the main loop.
            let mut verified = true;
            for _ in 0..5 {
                let (_, t) = sample_tangent(f, v, &mut rng, cfg.retry_cap)?;
                used += 1;
                let i = candidate.intersect(&t)?;
                if i.rank() != candidate.rank() {
                    cur = Some(i);
                    stable = 0;
                    verified = false;
                    break;
                }
            }
            if verified {
                return Ok(cur.expect("verified candidate"));
            }
        }
    }
    Err(Error::Genericity(format!(
        "vertex({}): did not stabilize within {cap} tangent spaces",
        v.label()
    )))
}

/// Vertex paired with the cone decision. A linear space is every one of
/// its own tangent spaces, so its vertex is itself, yet it does not count
/// as a cone; this returns None for linear spaces and for empty vertices,
/// and the witness vertex otherwise.
pub fn cone_vertex<F: Field>(
    f: &F,
    v: &PolyMap,
    cfg: &GenericityConfig,
) -> Result<Option<ProjSubspace<F>>> {
    let vert = vertex(f, v, cfg)?;
    if vert.is_empty() || is_linear(f, v, cfg)? {
        return Ok(None);
    }
    Ok(Some(vert))
}

/// A variety is a cone exactly when it has a nonempty vertex and is not
/// itself a linear space.
pub fn is_cone<F: Field>(f: &F, v: &PolyMap, cfg: &GenericityConfig) -> Result<bool> {
    Ok(cone_vertex(f, v, cfg)?.is_some())
}

/// A variety is a linear space exactly when it fills its own span's
/// dimension, i.e. the span dimension equals the source dimension.
pub fn is_linear<F: Field>(f: &F, v: &PolyMap, cfg: &GenericityConfig) -> Result<bool> {
    Ok(span_dim(f, v, cfg)? == v.dim_source() as i64)
}

/// Recognizes the quadratic embedding of the plane: the only surface that
/// spans a P^5, has a secant variety of dimension 4 instead of 5, and is
/// not a cone.
pub fn is_veronese<F: Field>(f: &F, v: &PolyMap, cfg: &GenericityConfig) -> Result<bool> {
    if v.dim_source() != 2 || v.ambient_dim() < 5 {
        return Ok(false);
    }
    if span_dim(f, v, cfg)? != 5 {
        return Ok(false);
    }
    if secant_dimension(f, v, cfg)?.value != 4 {
        return Ok(false);
    }
    Ok(vertex(f, v, cfg)?.is_empty())
}

/// Whether the tangent space at every sampled generic point meets the
/// target subspace. Meeting is a closed condition, so a single generic
/// miss decides the question negatively.
pub fn tangent_meets<F: Field>(
    f: &F,
    v: &PolyMap,
    target: &ProjSubspace<F>,
    cfg: &GenericityConfig,
) -> Result<bool> {
    if v.ambient_dim() != target.ambient_dim() {
        return Err(Error::AmbientMismatch(v.ambient_dim(), target.ambient_dim()));
    }
    let mut rng = derive_rng(cfg.seed, "tangent_meets", &[v.label()]);
    for _ in 0..cfg.trials.max(3) {
        let (_, t) = sample_tangent(f, v, &mut rng, cfg.retry_cap)?;
        if t.intersect(target)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}
