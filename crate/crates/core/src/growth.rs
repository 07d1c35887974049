//! Seeded, replayable random growth of uniform noncrossing partitions and
//! noncrossing pair partitions.
//!
//! Both chains run on Dyck-path codes: one step picks `k` uniformly in
//! `{0, ..., L}` and, on a fair coin, applies either the peak insertion or
//! the lift at time `k`. For partitions the code is the full `2n`-step path;
//! for pair partitions of `P_{2n}` it is the unconstrained half path.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dyck::DyckPath;
use crate::encoding::{decode, decode_pair};
use crate::error::{Error, Result};
use crate::partition::{NoncrossingPartition, PairPartition};

/// ChaCha8 generator that remembers its seed. Stream `s` of a seed gives an
/// independent generator for fan-out work.
#[derive(Debug, Clone)]
pub struct GrowthRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl GrowthRng {
    pub fn new(seed: u64) -> Self {
        GrowthRng { seed, inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn split(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        GrowthRng { seed, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl RngCore for GrowthRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Ncp,
    Pair,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Ncp => "ncp",
            Model::Pair => "pair",
        }
    }

    /// The partition coded by `path` under this model.
    pub fn decode(self, path: &DyckPath) -> NoncrossingPartition {
        match self {
            Model::Ncp => decode(path).0,
            Model::Pair => decode_pair(path).into_inner(),
        }
    }

    fn kinds(self) -> [MoveKind; 2] {
        match self {
            Model::Ncp => [MoveKind::InsertVertex, MoveKind::Slice],
            Model::Pair => [MoveKind::ShortChord, MoveKind::LongChord],
        }
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ncp" => Ok(Model::Ncp),
            "pair" => Ok(Model::Pair),
            other => Err(Error::Parse(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    InsertVertex,
    Slice,
    ShortChord,
    LongChord,
}

impl MoveKind {
    pub fn token(self) -> &'static str {
        match self {
            MoveKind::InsertVertex => "insert",
            MoveKind::Slice => "slice",
            MoveKind::ShortChord => "short",
            MoveKind::LongChord => "long",
        }
    }

    fn is_insertion(self) -> bool {
        matches!(self, MoveKind::InsertVertex | MoveKind::ShortChord)
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "insert" => Ok(MoveKind::InsertVertex),
            "slice" => Ok(MoveKind::Slice),
            "short" => Ok(MoveKind::ShortChord),
            "long" => Ok(MoveKind::LongChord),
            other => Err(Error::Parse(format!("unknown move kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrowthMove {
    pub kind: MoveKind,
    pub k: usize,
}

/// Applies one move to a code path.
pub fn apply_move(path: &DyckPath, mv: GrowthMove) -> Result<DyckPath> {
    if mv.kind.is_insertion() {
        path.marchal_insert(mv.k)
    } else {
        path.marchal_lift(mv.k)
    }
}

/// The code of the size-one object for either model.
pub fn base_path() -> DyckPath {
    DyckPath::from_heights_unchecked(vec![0, 1, 0])
}

/// Draws one random move for the current code.
pub fn random_move<R: Rng + ?Sized>(model: Model, path: &DyckPath, rng: &mut R) -> GrowthMove {
    let k = rng.random_range(0..=path.len() as u64) as usize;
    let [insert, lift] = model.kinds();
    let kind = if rng.random_bool(0.5) { insert } else { lift };
    GrowthMove { kind, k }
}

/// Seed, model and moves of one growth run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTrajectory {
    pub model: Model,
    pub seed: u64,
    pub moves: Vec<GrowthMove>,
}

impl GrowthTrajectory {
    /// Size of the final object.
    pub fn final_size(&self) -> usize {
        self.moves.len() + 1
    }

    /// Lazily replays the codes, starting with the base path.
    pub fn replay(&self) -> Replay<'_> {
        Replay { trajectory: self, step: 0, current: None }
    }

    pub fn replay_final(&self) -> Result<NoncrossingPartition> {
        Ok(self.model.decode(&self.walk(|_, _| ())?))
    }

    /// Partitions of the requested sizes, in the order given.
    pub fn replay_checkpoints(&self, sizes: &[usize]) -> Result<Vec<NoncrossingPartition>> {
        let mut found: Vec<Option<NoncrossingPartition>> = vec![None; sizes.len()];
        self.walk(|size, path| {
            for (slot, &wanted) in found.iter_mut().zip(sizes) {
                if wanted == size {
                    *slot = Some(self.model.decode(path));
                }
            }
        })?;
        found
            .into_iter()
            .zip(sizes)
            .map(|(p, &size)| {
                p.ok_or_else(|| Error::MalformedTrajectory {
                    step: size,
                    reason: format!("trajectory only reaches size {}", self.final_size()),
                })
            })
            .collect()
    }

    /// Move `step` (1-based) must belong to the model and satisfy `k <= 2 step`.
    fn check(&self, step: usize, mv: GrowthMove) -> Result<()> {
        if !self.model.kinds().contains(&mv.kind) {
            return Err(Error::MalformedTrajectory {
                step,
                reason: format!("move {} does not belong to model {}", mv.kind.token(), self.model.name()),
            });
        }
        if mv.k > 2 * step {
            return Err(Error::MalformedTrajectory { step, reason: format!("k={} exceeds {}", mv.k, 2 * step) });
        }
        Ok(())
    }

    /// Applies every move, calling `visit(size, code)` on each code, and
    /// returns the final code.
    fn walk(&self, mut visit: impl FnMut(usize, &DyckPath)) -> Result<DyckPath> {
        let mut path = base_path();
        visit(1, &path);
        for (i, &mv) in self.moves.iter().enumerate() {
            self.check(i + 1, mv)?;
            path = apply_move(&path, mv).expect("k checked against the path length");
            visit(i + 2, &path);
        }
        Ok(path)
    }
}

/// Iterator over the codes of a trajectory, base first.
pub struct Replay<'a> {
    trajectory: &'a GrowthTrajectory,
    step: usize,
    current: Option<DyckPath>,
}

impl Iterator for Replay<'_> {
    type Item = Result<DyckPath>;

    fn next(&mut self) -> Option<Self::Item> {
        let Some(current) = &self.current else {
            let base = base_path();
            self.current = Some(base.clone());
            return Some(Ok(base));
        };
        let mv = *self.trajectory.moves.get(self.step)?;
        self.step += 1;
        if let Err(e) = self.trajectory.check(self.step, mv) {
            self.step = self.trajectory.moves.len();
            return Some(Err(e));
        }
        let next = apply_move(current, mv).expect("k checked against the path length");
        self.current = Some(next.clone());
        Some(Ok(next))
    }
}

/// Replays a trajectory into all of its partitions, base first.
pub fn replay(trajectory: &GrowthTrajectory) -> Result<Vec<NoncrossingPartition>> {
    trajectory.replay().map(|p| p.map(|p| trajectory.model.decode(&p))).collect()
}

/// Runs a growth chain for `n_target - 1` steps and returns the final code.
pub fn grow_path(model: Model, n_target: usize, rng: &mut GrowthRng) -> (DyckPath, GrowthTrajectory) {
    let mut path = base_path();
    let mut moves = Vec::with_capacity(n_target.saturating_sub(1));
    for _ in 1..n_target {
        let mv = random_move(model, &path, rng);
        path = apply_move(&path, mv).expect("random k is within the path");
        moves.push(mv);
    }
    (path, GrowthTrajectory { model, seed: rng.seed(), moves })
}

/// A uniform noncrossing partition of `P_{n_target}` grown from
/// `{{0}}`, with the trajectory that produced it.
pub fn grow_ncp(n_target: usize, rng: &mut GrowthRng) -> (NoncrossingPartition, GrowthTrajectory) {
    let (path, trajectory) = grow_path(Model::Ncp, n_target, rng);
    (decode(&path).0, trajectory)
}

/// A uniform noncrossing pair partition of `P_{2 n_target}`
/// grown from `{{0, 1}}`.
pub fn grow_pair(n_target: usize, rng: &mut GrowthRng) -> (PairPartition, GrowthTrajectory) {
    let (path, trajectory) = grow_path(Model::Pair, n_target, rng);
    (decode_pair(&path), trajectory)
}

/// A uniform `2n`-step Dyck path: shuffle `n` up-steps and `n+1`
/// down-steps, rotate to start after the first global minimum of the
/// partial sums (cycle lemma) and drop the final down-step.
pub fn uniform_dyck<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DyckPath {
    let mut steps: Vec<i8> = std::iter::repeat_n(1, n).chain(std::iter::repeat_n(-1, n + 1)).collect();
    steps.shuffle(rng);
    let (mut sum, mut min, mut start) = (0i64, 0i64, 0usize);
    for (i, &s) in steps.iter().enumerate() {
        sum += s as i64;
        if sum < min {
            min = sum;
            start = i + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(start % len);
    let mut heights = Vec::with_capacity(2 * n + 1);
    let mut h = 0u32;
    heights.push(0);
    for &s in &steps[..2 * n] {
        h = if s > 0 { h + 1 } else { h - 1 };
        heights.push(h);
    }
    DyckPath::from_heights_unchecked(heights)
}

/// A uniform noncrossing partition of `P_n`, sampled independently.
pub fn uniform_ncp_direct<R: Rng + ?Sized>(n: usize, rng: &mut R) -> NoncrossingPartition {
    decode(&uniform_dyck(n, rng)).0
}

/// A uniform noncrossing pair partition of `P_{2n}`, sampled independently.
pub fn uniform_pair_direct<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PairPartition {
    decode_pair(&uniform_dyck(n, rng))
}

impl fmt::Display for GrowthTrajectory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model={} seed={} steps={}", self.model.name(), self.seed, self.moves.len())?;
        for mv in &self.moves {
            writeln!(f, "{} {}", mv.k, mv.kind.token())?;
        }
        Ok(())
    }
}

impl FromStr for GrowthTrajectory {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing trajectory header".into()))?;
        let (mut model, mut seed, mut steps) = (None, None, None);
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
            let bad = |e: std::num::ParseIntError| Error::Parse(format!("{key}: {e}"));
            match key {
                "model" => model = Some(value.parse::<Model>()?),
                "seed" => seed = Some(value.parse::<u64>().map_err(bad)?),
                "steps" => steps = Some(value.parse::<usize>().map_err(bad)?),
                other => return Err(Error::Parse(format!("unknown header field {other:?}"))),
            }
        }
        let (Some(model), Some(seed), Some(steps)) = (model, seed, steps) else {
            return Err(Error::Parse("header needs model, seed and steps".into()));
        };
        let moves = lines
            .map(|line| {
                let (k, kind) = line
                    .split_once(' ')
                    .ok_or_else(|| Error::Parse(format!("bad move line {line:?}")))?;
                let k = k.parse().map_err(|e| Error::Parse(format!("{k:?}: {e}")))?;
                Ok(GrowthMove { kind: kind.trim().parse()?, k })
            })
            .collect::<Result<Vec<_>>>()?;
        if moves.len() != steps {
            return Err(Error::Parse(format!("header announces {steps} moves, found {}", moves.len())));
        }
        Ok(GrowthTrajectory { model, seed, moves })
    }
}
