//! Baker-style layering: BFS levels grouped by residue mod `t`. Deleting one
//! residue class leaves bands of `t - 1` consecutive levels, which on planar
//! (more generally, linear-local-treewidth) inputs have bounded treewidth.
//! Every driver solves each shift exactly and keeps the best.

use serde::{Deserialize, Serialize};

use crate::dp::{chromatic_number, nice_decompose, solve_ds, solve_maxcut, solve_wis, Certificate, DpSolution, DpStats, ForcedSets};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{EdgeWeights, Graph, LevelMap, Vertex, VertexWeights};
use crate::oracle::check;
use crate::treedec::{heuristic_decompose, Strategy};

/// Local-treewidth slope assumed when sizing default width caps
/// (`tw` of a radius-`r` ball at most `LAMBDA * r`).
pub const LAMBDA: usize = 3;

/// Width cap implied by [`LAMBDA`] for `t - 1` surviving levels per band.
pub fn default_width_cap(t: usize) -> usize {
    (LAMBDA * t).saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BakerPartition {
    pub t: usize,
    pub levels: LevelMap,
    /// `classes[i]` holds the vertices whose level is `i` mod `t`, sorted.
    pub classes: Vec<Vec<Vertex>>,
}

pub fn baker_partition(g: &Graph, t: usize, roots: Option<&[Vertex]>) -> Result<BakerPartition> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let levels = g.bfs_layers(roots)?;
    let mut classes = vec![Vec::new(); t];
    for v in g.vertices() {
        classes[levels.level[v] % t].push(v);
    }
    Ok(BakerPartition { t, levels, classes })
}

impl BakerPartition {
    /// Checks disjointness, coverage, residue consistency and that every edge
    /// joins equal or adjacent levels.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(format!("baker partition: {m}")));
        let mut seen = vec![false; g.n()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                if seen[v] {
                    return bad(format!("vertex {v} in two classes"));
                }
                seen[v] = true;
                if self.levels.level[v] % self.t != i {
                    return bad(format!("vertex {v} at level {} in class {i}", self.levels.level[v]));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return bad(format!("vertex {v} uncovered"));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.levels.level[u].abs_diff(self.levels.level[v]) > 1) {
            return bad(format!("edge {u} {v} skips a level"));
        }
        Ok(())
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Declared approximation factor `num / den`, as a lower bound on the value
/// for maximisation or an upper bound for minimisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guarantee {
    pub num: u64,
    pub den: u64,
    pub maximize: bool,
}

impl Guarantee {
    /// Integer bound the value must meet given the optimum: ceiling of
    /// `num/den * opt` for maximisation, floor for minimisation.
    pub fn bound(&self, opt: u64) -> u64 {
        let p = self.num as u128 * opt as u128;
        let d = self.den as u128;
        (if self.maximize { p.div_ceil(d) } else { p / d }) as u64
    }

    pub fn holds(&self, value: u64, opt: u64) -> bool {
        if self.maximize {
            value >= self.bound(opt)
        } else {
            value <= self.bound(opt)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxReport {
    pub value: u64,
    pub shift: usize,
    pub widths: Vec<usize>,
    pub guarantee: Guarantee,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PtasConfig {
    pub t: usize,
    pub width_cap: usize,
    pub roots: Option<Vec<Vertex>>,
    pub strategy: Strategy,
    pub exec: Exec,
}

impl PtasConfig {
    pub fn new(t: usize, width_cap: usize) -> Self {
        PtasConfig { t, width_cap, roots: None, strategy: Strategy::MinFill, exec: Exec::default() }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

fn require_t(t: usize, min: usize) -> Result<()> {
    if t < min {
        Err(Error::InvalidArgument(format!("t must be at least {min}, got {t}")))
    } else {
        Ok(())
    }
}

/// Width of the heuristic decomposition of `g - class_i` for every shift.
pub fn deletion_widths(g: &Graph, p: &BakerPartition, strategy: Strategy) -> Vec<usize> {
    p.classes.iter().map(|class| heuristic_decompose(&g.without(class).0, strategy).width()).collect()
}

struct ShiftResult {
    value: u64,
    width: usize,
    certificate: Certificate,
    stats: DpStats,
}

/// Runs `solve` on each shift in parallel and keeps the best by
/// `(value, lowest shift)`.
fn best_shift<F>(t: usize, cfg: &PtasConfig, maximize: bool, solve: F) -> Result<(usize, Vec<usize>, ShiftResult)>
where
    F: Fn(usize) -> Result<ShiftResult> + Sync + Send,
{
    let results = cfg.exec.map((0..t).collect(), solve);
    let mut widths = Vec::with_capacity(t);
    let mut best: Option<(usize, ShiftResult)> = None;
    for (i, r) in results.into_iter().enumerate() {
        let r = r?;
        widths.push(r.width);
        let better = match &best {
            None => true,
            Some((_, b)) => if maximize { r.value > b.value } else { r.value < b.value },
        };
        if better {
            best = Some((i, r));
        }
    }
    let (shift, r) = best.expect("t >= 1 shifts");
    Ok((shift, widths, r))
}

fn decompose_capped(h: &Graph, cfg: &PtasConfig, shift: usize) -> Result<crate::treedec::NiceTreeDecomposition> {
    let ntd = nice_decompose(h, cfg.strategy);
    if ntd.width() > cfg.width_cap {
        return Err(Error::ShiftWidthCap { shift, width: ntd.width(), cap: cfg.width_cap });
    }
    Ok(ntd)
}

/// Independent set within factor `1 - 1/t`: some class carries at most a
/// `1/t` share of any optimum.
pub fn ptas_is(g: &Graph, weights: &VertexWeights, cfg: &PtasConfig) -> Result<(DpSolution, ApproxReport)> {
    require_t(cfg.t, 2)?;
    weights.check(g)?;
    let part = baker_partition(g, cfg.t, cfg.roots.as_deref())?;
    let (shift, widths, best) = best_shift(cfg.t, cfg, true, |i| {
        let (h, map) = g.without(&part.classes[i]);
        let ntd = decompose_capped(&h, cfg, i)?;
        let sol = solve_wis(&h, &weights.restrict(&map), &ntd, &ForcedSets::none())?;
        let set: Vec<Vertex> = sol.certificate.vertices().unwrap_or_default().iter().map(|&v| map[v]).collect();
        Ok(ShiftResult { value: sol.value, width: ntd.width(), certificate: Certificate::Vertices(set), stats: sol.stats })
    })?;
    let guarantee = Guarantee { num: cfg.t as u64 - 1, den: cfg.t as u64, maximize: true };
    Ok(finish(shift, widths, best, guarantee))
}

/// Max cut within factor `1 - 2/t`: an edge touches at most two classes.
/// Deleted vertices are placed greedily afterwards, which never lowers the cut.
pub fn ptas_maxcut(g: &Graph, weights: &EdgeWeights, cfg: &PtasConfig) -> Result<(DpSolution, ApproxReport)> {
    require_t(cfg.t, 3)?;
    weights.check(g)?;
    let part = baker_partition(g, cfg.t, cfg.roots.as_deref())?;
    let (shift, widths, best) = best_shift(cfg.t, cfg, true, |i| {
        let (h, map) = g.without(&part.classes[i]);
        let ntd = decompose_capped(&h, cfg, i)?;
        let sol = solve_maxcut(&h, &weights.restrict(&h, &map), &ntd)?;
        let Certificate::Bipartition(sub) = &sol.certificate else { unreachable!() };
        let mut side = vec![u8::MAX; g.n()];
        for (j, &v) in map.iter().enumerate() {
            side[v] = sub[j];
        }
        for &v in &part.classes[i] {
            let mut pull = [0u64; 2];
            for &u in g.neighbors(v) {
                if side[u] != u8::MAX {
                    pull[side[u] as usize] += weights.get(u, v);
                }
            }
            // join the side opposite the heavier placed neighbourhood
            side[v] = if pull[0] >= pull[1] { 1 } else { 0 };
        }
        let value = check::cut_weight(g, weights, &side);
        debug_assert!(value >= sol.value);
        Ok(ShiftResult { value, width: ntd.width(), certificate: Certificate::Bipartition(side), stats: sol.stats })
    })?;
    let guarantee = Guarantee { num: cfg.t as u64 - 2, den: cfg.t as u64, maximize: true };
    Ok(finish(shift, widths, best, guarantee))
}

/// Level ranges `(slab_lo, inner_lo, inner_hi, slab_hi)` for one shift: inner
/// blocks of `t` levels start at levels congruent to `shift`, and each slab
/// adds one level on either side, so consecutive slabs share two levels.
pub fn slabs(max_level: usize, t: usize, shift: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    let mut lo = shift % t;
    if lo > 0 {
        out.push((0, 0, lo - 1, (lo).min(max_level)));
    }
    while lo <= max_level {
        let hi = (lo + t - 1).min(max_level);
        out.push((lo.saturating_sub(1), lo, hi, (hi + 1).min(max_level)));
        lo += t;
    }
    out
}

/// Dominating set within factor `1 + 2/t`: every slab is solved exactly for
/// its inner levels, and a vertex lies in two slabs only when its level is
/// one of the two shared ones.
pub fn ptas_domset(g: &Graph, cfg: &PtasConfig) -> Result<(DpSolution, ApproxReport)> {
    require_t(cfg.t, 3)?;
    let levels = g.bfs_layers(cfg.roots.as_deref())?;
    let max_level = levels.max_level();
    let (shift, widths, best) = best_shift(cfg.t, cfg, false, |i| {
        let mut chosen = vec![false; g.n()];
        let mut width = 0;
        let mut stats = DpStats::default();
        if g.n() > 0 {
            for (slo, ilo, ihi, shi) in slabs(max_level, cfg.t, i) {
                let keep: Vec<Vertex> = g.vertices().filter(|&v| (slo..=shi).contains(&levels.level[v])).collect();
                let (h, map) = g.induced_subgraph(&keep);
                let targets: Vec<Vertex> =
                    (0..h.n()).filter(|&j| (ilo..=ihi).contains(&levels.level[map[j]])).collect();
                if targets.is_empty() {
                    continue;
                }
                let ntd = decompose_capped(&h, cfg, i)?;
                width = width.max(ntd.width());
                let sol = solve_ds(&h, &ntd, &targets)?;
                stats.nodes += sol.stats.nodes;
                stats.table_entries += sol.stats.table_entries;
                for &j in sol.certificate.vertices().unwrap_or_default() {
                    chosen[map[j]] = true;
                }
            }
        }
        stats.width = width;
        let set: Vec<Vertex> = g.vertices().filter(|&v| chosen[v]).collect();
        Ok(ShiftResult { value: set.len() as u64, width, certificate: Certificate::Vertices(set), stats })
    })?;
    let guarantee = Guarantee { num: cfg.t as u64 + 2, den: cfg.t as u64, maximize: false };
    Ok(finish(shift, widths, best, guarantee))
}

fn finish(shift: usize, widths: Vec<usize>, best: ShiftResult, guarantee: Guarantee) -> (DpSolution, ApproxReport) {
    let report = ApproxReport { value: best.value, shift, widths, guarantee };
    (DpSolution { value: best.value, certificate: best.certificate, stats: best.stats }, report)
}

/// Even and odd BFS levels.
pub fn decompose_two_parts(g: &Graph) -> (Vec<Vertex>, Vec<Vertex>) {
    let levels = g.bfs_layers(None).expect("automatic roots cover every component");
    g.vertices().partition(|&v| levels.level[v].is_multiple_of(2))
}

/// Colors each part optimally with disjoint palettes; at most `2 chi(g)` colors.
pub fn two_part_color(g: &Graph, parts: (&[Vertex], &[Vertex]), width_cap: usize) -> Result<(Vec<usize>, ApproxReport)> {
    let (a, b) = parts;
    let mut owner = vec![u8::MAX; g.n()];
    for (&v, side) in a.iter().map(|v| (v, 0u8)).chain(b.iter().map(|v| (v, 1u8))) {
        g.check_vertex(v)?;
        if owner[v] != u8::MAX {
            return Err(Error::InvalidArgument(format!("vertex {v} is in both parts")));
        }
        owner[v] = side;
    }
    if let Some(v) = owner.iter().position(|&o| o == u8::MAX) {
        return Err(Error::InvalidArgument(format!("vertex {v} is in neither part")));
    }
    let mut color = vec![0usize; g.n()];
    let mut offset = 0;
    let mut widths = Vec::with_capacity(2);
    for part in [a, b] {
        let (h, map) = g.induced_subgraph(part);
        let ntd = nice_decompose(&h, Strategy::MinFill);
        if ntd.width() > width_cap {
            return Err(Error::WidthCap { width: ntd.width(), cap: width_cap });
        }
        widths.push(ntd.width());
        let sol = chromatic_number(&h, &ntd)?;
        let Certificate::Coloring(c) = sol.certificate else { unreachable!() };
        for (j, &v) in map.iter().enumerate() {
            color[v] = offset + c[j];
        }
        offset += sol.value as usize;
    }
    let report = ApproxReport {
        value: offset as u64,
        shift: 0,
        widths,
        guarantee: Guarantee { num: 2, den: 1, maximize: false },
    };
    Ok((color, report))
}
