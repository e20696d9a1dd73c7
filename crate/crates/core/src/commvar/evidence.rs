//! Evidence that a commuting pair lies in `C0`, following the reduction
//! steps of the irreducibility argument for the `SO_SO` family.
//!
//! Every node stores the data of one step; [`verify_evidence`] replays all
//! side conditions from scratch along the tree.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{
    combine, is_nilpotent, is_semisimple, jordan_chevalley, kernel_basis, solve, Matrix,
};
use crate::liealg::{ad_restricted, centralizer_in, Subspace};
use crate::nilpotent::{centralizer_limit, is_even, is_sigma_distinguished, semisimple_deformation, DecisionMode};
use crate::poly::MPoly;
use crate::sampling::{RunConfig, Sampler};
use crate::scalar::{qf, Q};
use crate::sympair::{predicted_centralizer_pair, CentralizerShape, Family, SymPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseTag {
    /// Both entries lie in the fixed Cartan subspace `c`.
    InCartanProduct,
    /// Both entries are semisimple, so they span a toral subspace of a
    /// Cartan subspace conjugate to `c`.
    CommutingSemisimple,
    /// One entry is zero and the other lies in `g1 = closure(G0 c)`.
    ZeroComponent,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Step {
    BaseCase {
        tag: BaseTag,
    },
    /// The roles of `x` and `y` are exchanged.
    Swap {
        child: Box<EvidenceNode>,
    },
    /// `x = x_s + x_n`; the child reduces by `h = x_s`, which commutes with
    /// `y` because it is a polynomial in `x`.
    JordanSplit {
        semisimple: Matrix<Q>,
        child: Box<EvidenceNode>,
    },
    /// Passes to the centralizer pair `(g_h, (g0)_h)` and drops central
    /// components there; `shape` is the predicted block structure at the top
    /// level.
    SemisimpleReduction {
        h: Matrix<Q>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shape: Option<CentralizerShape>,
        child: Box<EvidenceNode>,
    },
    /// `(x, (1 - t) y + t h)` is a commuting curve through `(x, y)`; the
    /// child treats the member at `t = t0`.
    NilpotentDeformation {
        h: Matrix<Q>,
        curve: Matrix<MPoly>,
        #[serde(with = "crate::exactlin::rational")]
        t0: Q,
        child: Box<EvidenceNode>,
    },
    /// Both entries are σ-distinguished nilpotents; `x` is even and lies on
    /// the semisimple curve `x - t^2 f` whose checks all pass.
    SheetStep {
        even: bool,
        deformation_passed: bool,
        limit_equal: bool,
    },
    Unknown {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvidenceNode {
    pub x: Matrix<Q>,
    pub y: Matrix<Q>,
    pub step: Step,
}

impl EvidenceNode {
    /// Whether no branch ended in `Unknown`.
    pub fn is_complete(&self) -> bool {
        match &self.step {
            Step::Unknown { .. } => false,
            Step::BaseCase { .. } | Step::SheetStep { .. } => true,
            Step::Swap { child }
            | Step::JordanSplit { child, .. }
            | Step::SemisimpleReduction { child, .. }
            | Step::NilpotentDeformation { child, .. } => child.is_complete(),
        }
    }

    pub fn depth(&self) -> usize {
        match &self.step {
            Step::Swap { child }
            | Step::JordanSplit { child, .. }
            | Step::SemisimpleReduction { child, .. }
            | Step::NilpotentDeformation { child, .. } => 1 + child.depth(),
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MembershipEvidence {
    Evidence { tree: EvidenceNode },
    Unknown { reason: String, partial: EvidenceNode },
}

/// The subpair cut out by the semisimple elements reduced by so far: the
/// derived algebra of their common centralizer, with the centre of that
/// centralizer kept for projecting off central components.
struct Context {
    hs: Vec<Matrix<Q>>,
    pair: SymPair,
    centralizer_dim: usize,
    center: Vec<Matrix<Q>>,
    derived: Vec<Matrix<Q>>,
}

impl Context {
    fn root(pair: &SymPair) -> Self {
        Context {
            hs: Vec::new(),
            pair: pair.clone(),
            centralizer_dim: pair.algebra().dim(),
            center: Vec::new(),
            derived: pair.algebra().basis().to_vec(),
        }
    }

    fn reduce(&self, h: &Matrix<Q>) -> Result<Self> {
        let n = h.rows();
        let g = centralizer_in(self.pair.algebra().basis(), h);
        let center = if g.is_empty() {
            Vec::new()
        } else {
            let blocks: Vec<Matrix<Q>> = g.iter().map(|b| ad_restricted(&g, b)).collect();
            let mut stacked = Matrix::zeros(blocks.iter().map(Matrix::rows).sum(), g.len());
            let mut r = 0;
            for b in &blocks {
                stacked.set_block(r, 0, b);
                r += b.rows();
            }
            kernel_basis(&stacked).iter().map(|c| combine(c, &g)).collect()
        };
        let brackets: Vec<Matrix<Q>> = (0..g.len())
            .flat_map(|i| (i + 1..g.len()).map(move |j| (i, j)))
            .map(|(i, j)| g[i].comm(&g[j]))
            .collect();
        let derived = Subspace::spanned_by(n, &brackets).basis().to_vec();
        let mut hs = self.hs.clone();
        hs.push(h.clone());
        Ok(Context { hs, pair: self.pair.subpair(&derived)?, centralizer_dim: g.len(), center, derived })
    }

    fn is_root(&self) -> bool {
        self.hs.is_empty()
    }

    /// Component in `[g', g']` of an element of the centralizer `g'`.
    fn core(&self, x: &Matrix<Q>) -> Result<Matrix<Q>> {
        if self.center.is_empty() {
            return Ok(x.clone());
        }
        let cols: Vec<Vec<Q>> = self.center.iter().chain(&self.derived).map(Matrix::to_vector).collect();
        let n = x.rows();
        let coeffs = solve(&Matrix::from_columns(n * n, &cols), &x.to_vector())
            .ok_or_else(|| Error::Precondition("element outside the centralizer subalgebra".into()))?;
        Ok(combine(&coeffs[self.center.len()..], &self.derived))
    }

    fn is_central(&self, h: &Matrix<Q>) -> bool {
        self.pair.algebra().basis().iter().all(|b| b.comm(h).is_zero())
    }
}

fn leaf(x: &Matrix<Q>, y: &Matrix<Q>, step: Step) -> EvidenceNode {
    EvidenceNode { x: x.clone(), y: y.clone(), step }
}

fn unknown(x: &Matrix<Q>, y: &Matrix<Q>, reason: &str) -> EvidenceNode {
    leaf(x, y, Step::Unknown { reason: reason.to_string() })
}

fn deformation_curve(y: &Matrix<Q>, h: &Matrix<Q>) -> Matrix<MPoly> {
    let t = MPoly::var(0);
    let one_minus_t = MPoly::constant(Q::one()) - t.clone();
    y.lift::<MPoly>().map(|c| c * &one_minus_t).add(&h.lift::<MPoly>().map(|c| c * &t))
}

fn at(curve: &Matrix<MPoly>, t: &Q) -> Matrix<Q> {
    curve.map(|c| c.eval_var(0, t).as_constant().unwrap_or_default())
}

struct Builder<'a> {
    pair: &'a SymPair,
    cfg: &'a RunConfig,
    rng: Sampler,
    max_depth: usize,
}

impl Builder<'_> {
    fn node(&mut self, x: &Matrix<Q>, y: &Matrix<Q>, ctx: &Context, depth: usize) -> Result<EvidenceNode> {
        if depth > self.max_depth {
            return Ok(unknown(x, y, "maximum depth reached"));
        }
        if x.is_zero() || y.is_zero() {
            return Ok(leaf(x, y, Step::BaseCase { tag: BaseTag::ZeroComponent }));
        }
        let cartan = Subspace::spanned_by(self.pair.ambient(), self.pair.cartan());
        if ctx.is_root() && cartan.contains(x) && cartan.contains(y) {
            return Ok(leaf(x, y, Step::BaseCase { tag: BaseTag::InCartanProduct }));
        }
        let (x_ss, y_ss) = (is_semisimple(x)?, is_semisimple(y)?);
        if x_ss && y_ss {
            return Ok(leaf(x, y, Step::BaseCase { tag: BaseTag::CommutingSemisimple }));
        }
        if !is_nilpotent(x) {
            if x_ss {
                return self.reduction(x, y, x, ctx, depth);
            }
            let (s, _) = jordan_chevalley(x)?;
            let child = self.reduction(x, y, &s, ctx, depth + 1)?;
            return Ok(leaf(x, y, Step::JordanSplit { semisimple: s, child: Box::new(child) }));
        }
        if !is_nilpotent(y) {
            let child = self.node(y, x, ctx, depth + 1)?;
            return Ok(leaf(x, y, Step::Swap { child: Box::new(child) }));
        }
        if let Some(h) = self.semisimple_in_centralizer(x, ctx)? {
            return self.deformation(x, y, &h, ctx, depth);
        }
        if let Some(h) = self.semisimple_in_centralizer(y, ctx)? {
            let child = self.deformation(y, x, &h, ctx, depth + 1)?;
            return Ok(leaf(x, y, Step::Swap { child: Box::new(child) }));
        }
        self.sheet(x, y, ctx)
    }

    fn reduction(&mut self, x: &Matrix<Q>, y: &Matrix<Q>, h: &Matrix<Q>, ctx: &Context, depth: usize) -> Result<EvidenceNode> {
        let reduced = ctx.reduce(h)?;
        let shape = if ctx.is_root() && self.pair.family() == Family::SoSo {
            Some(predicted_centralizer_pair(self.pair, h)?)
        } else {
            None
        };
        let (cx, cy) = (reduced.core(x)?, reduced.core(y)?);
        let child = self.node(&cx, &cy, &reduced, depth + 1)?;
        Ok(leaf(x, y, Step::SemisimpleReduction { h: h.clone(), shape, child: Box::new(child) }))
    }

    /// A nonzero semisimple element of `(g1')_x ∩ [g', g']`, from the
    /// semisimple part of a seeded random centralizer element.
    fn semisimple_in_centralizer(&mut self, x: &Matrix<Q>, ctx: &Context) -> Result<Option<Matrix<Q>>> {
        let cent = centralizer_in(ctx.pair.g1().basis(), x);
        if cent.is_empty() {
            return Ok(None);
        }
        for _ in 0..self.cfg.samples {
            let z = combine(&self.rng.rationals(cent.len(), self.cfg.coordinate_bound), &cent);
            if !is_nilpotent(&z) {
                let (s, _) = jordan_chevalley(&z)?;
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    fn deformation(&mut self, x: &Matrix<Q>, y: &Matrix<Q>, h: &Matrix<Q>, ctx: &Context, depth: usize) -> Result<EvidenceNode> {
        let curve = deformation_curve(y, h);
        let t0 = [qf(1, 2), qf(1, 3), qf(2, 3), Q::one()]
            .into_iter()
            .find(|t| !is_nilpotent(&at(&curve, t)))
            .ok_or_else(|| Error::Internal("deformation curve stays nilpotent".into()))?;
        let child = self.node(x, &at(&curve, &t0), ctx, depth + 1)?;
        Ok(leaf(x, y, Step::NilpotentDeformation { h: h.clone(), curve, t0, child: Box::new(child) }))
    }

    fn sheet(&mut self, x: &Matrix<Q>, y: &Matrix<Q>, ctx: &Context) -> Result<EvidenceNode> {
        let pair = &ctx.pair;
        for e in [x, y] {
            let report = is_sigma_distinguished(e, pair, self.cfg)?;
            if !report.distinguished || report.mode == DecisionMode::Randomized {
                return Ok(unknown(x, y, "no semisimple element found in a centralizer that is not proven distinguished"));
            }
        }
        let even = is_even(x, pair)?;
        if !even {
            return Ok(unknown(x, y, "σ-distinguished element is not even"));
        }
        let deformation_passed = semisimple_deformation(x, pair)?.passed();
        let limit_equal = centralizer_limit(x, pair)?.equal;
        Ok(leaf(x, y, Step::SheetStep { even, deformation_passed, limit_equal }))
    }
}

/// Builds evidence that the commuting pair `(x, y)` lies in `C0`. A
/// semi-decision procedure: `Unknown` is returned when `max_depth` is hit or
/// no step applies.
pub fn membership_evidence(
    x: &Matrix<Q>,
    y: &Matrix<Q>,
    pair: &SymPair,
    max_depth: usize,
    cfg: &RunConfig,
) -> Result<MembershipEvidence> {
    if pair.family() != Family::SoSo {
        return Err(Error::InvalidParams("membership evidence is implemented for SO_SO".into()));
    }
    if !super::is_commuting_pair(x, y, pair)? {
        return Err(Error::Precondition("(x, y) is not a commuting pair in g1".into()));
    }
    let mut builder = Builder { pair, cfg, rng: cfg.rng("membership-evidence"), max_depth };
    let tree = builder.node(x, y, &Context::root(pair), 0)?;
    if tree.is_complete() {
        Ok(MembershipEvidence::Evidence { tree })
    } else {
        Ok(MembershipEvidence::Unknown { reason: first_unknown(&tree).unwrap_or_default(), partial: tree })
    }
}

fn first_unknown(node: &EvidenceNode) -> Option<String> {
    match &node.step {
        Step::Unknown { reason } => Some(reason.clone()),
        Step::Swap { child }
        | Step::JordanSplit { child, .. }
        | Step::SemisimpleReduction { child, .. }
        | Step::NilpotentDeformation { child, .. } => first_unknown(child),
        _ => None,
    }
}

/// Replays every side condition of the tree; errors name the failing step.
pub fn verify_evidence(tree: &EvidenceNode, pair: &SymPair, cfg: &RunConfig) -> Result<()> {
    check_node(tree, pair, cfg, &Context::root(pair))
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(what.to_string()))
    }
}

fn check_node(node: &EvidenceNode, pair: &SymPair, cfg: &RunConfig, ctx: &Context) -> Result<()> {
    let (x, y) = (&node.x, &node.y);
    ensure(ctx.pair.g1().contains(x) && ctx.pair.g1().contains(y), "pair leaves the current g1")?;
    ensure(x.comm(y).is_zero(), "pair does not commute")?;
    match &node.step {
        Step::BaseCase { tag } => match tag {
            BaseTag::ZeroComponent => ensure(x.is_zero() || y.is_zero(), "no zero component"),
            BaseTag::InCartanProduct => {
                let c = Subspace::spanned_by(pair.ambient(), pair.cartan());
                ensure(ctx.is_root() && c.contains(x) && c.contains(y), "pair is not in c x c")
            }
            BaseTag::CommutingSemisimple => ensure(is_semisimple(x)? && is_semisimple(y)?, "entries are not semisimple"),
        },
        Step::Swap { child } => {
            ensure(child.x == *y && child.y == *x, "swap does not exchange the entries")?;
            check_node(child, pair, cfg, ctx)
        }
        Step::JordanSplit { semisimple, child } => {
            ensure(jordan_chevalley(x)?.0 == *semisimple, "semisimple part is wrong")?;
            ensure(child.x == *x && child.y == *y, "split changes the pair")?;
            match &child.step {
                Step::SemisimpleReduction { h, .. } => ensure(h == semisimple, "split is not followed by its reduction")?,
                _ => return Err(Error::Verification("split is not followed by a reduction".into())),
            }
            check_node(child, pair, cfg, ctx)
        }
        Step::SemisimpleReduction { h, shape, child } => {
            ensure(!h.is_zero() && ctx.pair.g1().contains(h) && is_semisimple(h)?, "h is not a semisimple element of g1")?;
            ensure(h.comm(x).is_zero() && h.comm(y).is_zero(), "h does not commute with the pair")?;
            ensure(!ctx.is_central(h), "h is central, so the reduction makes no progress")?;
            let reduced = ctx.reduce(h)?;
            if let Some(shape) = shape {
                ensure(ctx.is_root(), "shape recorded below the top level")?;
                let predicted = predicted_centralizer_pair(pair, h)?;
                ensure(*shape == predicted, "recorded centralizer shape differs from the prediction")?;
                ensure(reduced.centralizer_dim == predicted.dim_g(), "dim g_h differs from the centralizer shape")?;
                let g1_h = centralizer_in(pair.g1().basis(), h).len();
                ensure(g1_h == predicted.dim_g1(), "dim (g1)_h differs from the centralizer shape")?;
            }
            ensure(child.x == reduced.core(x)? && child.y == reduced.core(y)?, "child is not the derived part")?;
            check_node(child, pair, cfg, &reduced)
        }
        Step::NilpotentDeformation { h, curve, t0, child } => {
            ensure(is_nilpotent(x), "deformed pair has non-nilpotent x")?;
            ensure(!h.is_zero() && ctx.pair.g1().contains(h) && is_semisimple(h)?, "h is not a semisimple element of g1")?;
            ensure(h.comm(x).is_zero(), "h does not commute with x")?;
            ensure(*curve == deformation_curve(y, h), "curve is not (1 - t) y + t h")?;
            ensure(x.lift::<MPoly>().comm(curve).is_zero(), "curve leaves the commuting variety")?;
            ensure(at(curve, &Q::zero()) == *y, "curve does not pass through y")?;
            ensure(child.x == *x && child.y == at(curve, t0), "child is not the member at t0")?;
            ensure(!is_nilpotent(&child.y), "member at t0 is nilpotent")?;
            check_node(child, pair, cfg, ctx)
        }
        Step::SheetStep { even, deformation_passed, limit_equal } => {
            let sub = &ctx.pair;
            ensure(!x.is_zero() && is_nilpotent(x) && is_nilpotent(y), "sheet step needs nilpotent entries")?;
            for e in [x, y] {
                let r = is_sigma_distinguished(e, sub, cfg)?;
                ensure(r.distinguished && r.mode != DecisionMode::Randomized, "entry is not proven distinguished")?;
            }
            ensure(*even && is_even(x, sub)?, "x is not even")?;
            ensure(*deformation_passed && semisimple_deformation(x, sub)?.passed(), "curve checks fail")?;
            ensure(*limit_equal && centralizer_limit(x, sub)?.equal, "centralizer limit differs")
        }
        Step::Unknown { .. } => Ok(()),
    }
}
