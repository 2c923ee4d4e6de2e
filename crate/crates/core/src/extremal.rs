//! The extremal family `B(n,k,δ) = K_δ ∨ (K_{n−2δ−k} ∪ ‾K_{δ+k})` and its
//! edge-deleted members.
//!
//! Canonical labeling: vertices `0..δ` are Y (the dominating clique), the
//! next `n−2δ−k` are Z (the large clique), the last `δ+k` are X (the
//! independent set). `E₁` is every pair inside `Y ∪ Z`, i.e. inside the
//! first `n−δ−k` labels. Family members are exactly `B − E′` for `E′ ⊆ E₁`.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph};
use crate::graph6::{from_graph6, to_graph6};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    X,
    Y,
    Z,
}

/// `(n, k, δ)` with `k ≥ 1`, `δ ≥ 1`, `n ≥ 2δ + k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
}

impl Params {
    pub fn new(n: usize, k: usize, delta: usize) -> Result<Self> {
        if k < 1 || delta < 1 {
            return Err(Error::InvalidParameters(format!("need k >= 1 and delta >= 1, got k={k}, delta={delta}")));
        }
        if n < 2 * delta + k + 1 {
            return Err(Error::InvalidParameters(format!(
                "need n >= 2*delta + k + 1 = {}, got n={n}",
                2 * delta + k + 1
            )));
        }
        Ok(Params { n, k, delta })
    }

    pub fn x_size(&self) -> usize {
        self.delta + self.k
    }

    pub fn z_size(&self) -> usize {
        self.n - 2 * self.delta - self.k
    }

    /// `|Y ∪ Z| = n − δ − k`.
    pub fn yz_size(&self) -> usize {
        self.n - self.delta - self.k
    }

    pub fn canonical_roles(&self) -> Vec<Role> {
        let mut roles = vec![Role::Y; self.delta];
        roles.extend(std::iter::repeat(Role::Z).take(self.z_size()));
        roles.extend(std::iter::repeat(Role::X).take(self.x_size()));
        roles
    }

    /// `⌊δ(δ+k)/4⌋`, the deletion budget of the first family.
    pub fn b1_budget(&self) -> usize {
        self.delta * (self.delta + self.k) / 4
    }

    pub fn e1_size(&self) -> usize {
        let m = self.yz_size();
        m * (m - 1) / 2
    }

    /// `E₁` in lexicographic order.
    pub fn e1(&self) -> EdgeList {
        let m = self.yz_size();
        let mut e = EdgeList::new();
        for u in 0..m {
            for v in (u + 1)..m {
                e.push_unchecked(u, v);
            }
        }
        e
    }

    fn in_e1(&self, u: usize, v: usize) -> bool {
        u != v && u < self.yz_size() && v < self.yz_size()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalInstance {
    pub graph: Graph,
    pub params: Params,
    pub roles: Vec<Role>,
    pub e1: EdgeList,
    pub removed: EdgeList,
}

impl ExtremalInstance {
    pub fn vertices_with(&self, role: Role) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == role)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn x_vertices(&self) -> Vec<usize> {
        self.vertices_with(Role::X)
    }

    pub fn y_vertices(&self) -> Vec<usize> {
        self.vertices_with(Role::Y)
    }

    pub fn z_vertices(&self) -> Vec<usize> {
        self.vertices_with(Role::Z)
    }

    /// Number of edges of `G[Y]`.
    pub fn edges_inside_y(&self) -> usize {
        let y = self.y_vertices();
        y.iter()
            .tuple_combinations()
            .filter(|&(&a, &b)| self.graph.has_edge(a, b))
            .count()
    }

    pub fn to_sidecar(&self) -> Sidecar {
        Sidecar {
            graph6: to_graph6(&self.graph),
            n: self.params.n,
            k: self.params.k,
            delta: self.params.delta,
            roles: self.roles.clone(),
            removed: self.removed.clone(),
        }
    }
}

/// JSON companion to an instance's graph6 string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub roles: Vec<Role>,
    pub removed: EdgeList,
}

impl Sidecar {
    /// Rebuilds the instance and checks that the graph6 string, roles and
    /// deletions agree.
    pub fn into_instance(self) -> Result<ExtremalInstance> {
        let params = Params::new(self.n, self.k, self.delta)?;
        let inst = build_member(params, &self.removed)?;
        let g = from_graph6(self.graph6.as_bytes())?;
        if g != inst.graph || self.roles != inst.roles {
            return Err(Error::InvalidParameters("sidecar does not match its graph".into()));
        }
        Ok(inst)
    }
}

pub fn build_b(n: usize, k: usize, delta: usize) -> Result<ExtremalInstance> {
    build_member(Params::new(n, k, delta)?, &EdgeList::new())
}

/// `B(n,k,δ) − E′` for any `E′ ⊆ E₁`, without a budget check.
pub fn build_member(params: Params, eprime: &EdgeList) -> Result<ExtremalInstance> {
    let Params { n, k, delta } = params;
    let lower = Graph::disjoint_union(&Graph::complete(n - 2 * delta - k), &Graph::empty(delta + k));
    let mut graph = Graph::join(&Graph::complete(delta), &lower);
    let mut seen = HashSet::new();
    for &(u, v) in eprime {
        if !params.in_e1(u, v) {
            return Err(Error::EdgeOutsideE1(u, v));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        graph.remove_edge(u, v)?;
    }
    let removed = EdgeList::from_pairs(n, eprime.iter().copied())?;
    Ok(ExtremalInstance {
        graph,
        params,
        roles: params.canonical_roles(),
        e1: params.e1(),
        removed,
    })
}

pub fn e1_edges(inst: &ExtremalInstance) -> EdgeList {
    inst.params.e1()
}

/// Member of the first family: at most `⌊δ(δ+k)/4⌋` deletions.
pub fn build_b1_member(n: usize, k: usize, delta: usize, eprime: &EdgeList) -> Result<ExtremalInstance> {
    let params = Params::new(n, k, delta)?;
    let budget = params.b1_budget();
    if eprime.len() > budget {
        return Err(Error::WrongEdgeBudget {
            actual: eprime.len(),
            expected: format!("at most {budget}"),
        });
    }
    build_member(params, eprime)
}

/// Member of the second family: exactly `⌊δ(δ+k)/4⌋ + 1` deletions.
pub fn build_b2_member(n: usize, k: usize, delta: usize, eprime: &EdgeList) -> Result<ExtremalInstance> {
    let params = Params::new(n, k, delta)?;
    let want = params.b1_budget() + 1;
    if eprime.len() != want {
        return Err(Error::WrongEdgeBudget {
            actual: eprime.len(),
            expected: format!("exactly {want}"),
        });
    }
    build_member(params, eprime)
}

fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Structured deletion sets: a matching inside Z, a star at the first Y
/// vertex, a star at the first Z vertex (each only when it fits).
fn structured_eprimes(params: Params, size: usize) -> Vec<EdgeList> {
    let m = params.yz_size();
    let z0 = params.delta;
    let mut out = Vec::new();
    if 2 * size <= params.z_size() {
        let mut e = EdgeList::new();
        for i in 0..size {
            e.push_unchecked(z0 + 2 * i, z0 + 2 * i + 1);
        }
        out.push(e);
    }
    if size < m {
        for center in [0, z0] {
            let mut e = EdgeList::new();
            for w in (0..m).filter(|&w| w != center).take(size) {
                e.push_unchecked(center, w);
            }
            out.push(e.sorted());
        }
    }
    out
}

/// `count` distinct deletion sets of `size` edges from `E₁`, reproducible
/// from `seed`. The structured sets come first when `count` allows.
pub fn sample_eprime(params: Params, size: usize, count: usize, seed: u64) -> Result<Vec<EdgeList>> {
    let e1 = params.e1();
    let m = e1.len();
    if size > m {
        return Err(Error::InvalidParameters(format!("size {size} exceeds |E1| = {m}")));
    }
    if size == 0 {
        return Ok(vec![EdgeList::new()]);
    }
    let available = binomial(m as u128, size as u128);
    if count as u128 > available {
        return Err(Error::ImpossibleCount { count, available });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<EdgeList> = HashSet::new();
    let mut out = Vec::with_capacity(count);
    for e in structured_eprimes(params, size) {
        if out.len() < count && seen.insert(e.clone()) {
            out.push(e);
        }
    }
    let pick = |idx: &[usize]| -> EdgeList {
        let mut idx = idx.to_vec();
        idx.sort_unstable();
        EdgeList::from_pairs(params.n, idx.iter().map(|&i| e1.as_slice()[i])).expect("E1 pairs are valid")
    };
    if available <= 4 * count as u128 {
        let mut all: Vec<Vec<usize>> = (0..m).combinations(size).collect();
        all.shuffle(&mut rng);
        for idx in all {
            if out.len() == count {
                break;
            }
            let e = pick(&idx);
            if seen.insert(e.clone()) {
                out.push(e);
            }
        }
    } else {
        while out.len() < count {
            let idx = rand::seq::index::sample(&mut rng, m, size).into_vec();
            let e = pick(&idx);
            if seen.insert(e.clone()) {
                out.push(e);
            }
        }
    }
    Ok(out)
}

/// Every `size`-subset of `E₁`, in lexicographic order.
pub fn enumerate_eprime(params: Params, size: usize) -> impl Iterator<Item = EdgeList> {
    let e1 = params.e1();
    let n = params.n;
    (0..e1.len()).combinations(size).map(move |idx| {
        EdgeList::from_pairs(n, idx.iter().map(|&i| e1.as_slice()[i])).expect("E1 pairs are valid")
    })
}

/// Checks `g` against the template under `roles`: X independent, no X–Z
/// edges. With `exact_xy`, also requires every X–Y edge and at most
/// `max_removed` missing pairs inside `Y ∪ Z`, which are returned.
fn template_deletions(g: &Graph, roles: &[Role], exact_xy: bool, max_removed: usize) -> Option<EdgeList> {
    let n = g.order();
    let mut removed = EdgeList::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let e = g.has_edge(u, v);
            match (roles[u], roles[v]) {
                (Role::X, Role::X) | (Role::X, Role::Z) | (Role::Z, Role::X) if e => return None,
                (Role::X, Role::Y) | (Role::Y, Role::X) if exact_xy && !e => return None,
                (Role::Y | Role::Z, Role::Y | Role::Z) if exact_xy && !e => {
                    removed.push_unchecked(u, v);
                    if removed.len() > max_removed {
                        return None;
                    }
                }
                _ => {}
            }
        }
    }
    Some(removed)
}

fn check_order(g: &Graph, params: Params) -> Result<()> {
    if g.order() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            actual: g.order(),
        });
    }
    Ok(())
}

fn roles_from(params: Params, x: &[usize], y_core: &[usize]) -> Vec<Role> {
    let mut roles = vec![Role::Z; params.n];
    for &v in x {
        roles[v] = Role::X;
    }
    let mut y: Vec<usize> = y_core.to_vec();
    for v in 0..params.n {
        if y.len() >= params.delta {
            break;
        }
        if roles[v] == Role::Z && !y.contains(&v) {
            y.push(v);
        }
    }
    for &v in &y {
        roles[v] = Role::Y;
    }
    roles
}

fn search_x(
    g: &Graph,
    cands: &[usize],
    from: usize,
    need: usize,
    delta: usize,
    chosen: &mut Vec<usize>,
    union: &mut Vec<usize>,
) -> bool {
    if chosen.len() == need {
        return true;
    }
    if cands.len() - from < need - chosen.len() {
        return false;
    }
    for i in from..cands.len() {
        let c = cands[i];
        if union.contains(&c) {
            continue;
        }
        let before = union.len();
        for w in g.neighbors(c) {
            if !union.contains(&w) {
                union.push(w);
            }
        }
        if union.len() <= delta {
            chosen.push(c);
            if search_x(g, cands, i + 1, need, delta, chosen, union) {
                return true;
            }
            chosen.pop();
        }
        union.truncate(before);
    }
    false
}

/// Whether `g` is a spanning subgraph of some labeling of `B(n,k,δ)`:
/// an independent set X of size `δ+k` whose neighborhoods fit inside a
/// δ-set Y. Returns a role assignment on success.
pub fn is_spanning_subgraph_of_b(g: &Graph, n: usize, k: usize, delta: usize) -> Result<Option<Vec<Role>>> {
    let params = Params::new(n, k, delta)?;
    check_order(g, params)?;
    let cands: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= delta).collect();
    let mut chosen = Vec::new();
    let mut union = Vec::new();
    if !search_x(g, &cands, 0, params.x_size(), delta, &mut chosen, &mut union) {
        return Ok(None);
    }
    let roles = roles_from(params, &chosen, &union);
    debug_assert!(template_deletions(g, &roles, false, 0).is_some());
    Ok(Some(roles))
}

/// Recognizes `g` as exactly `B(n,k,δ) − E′` (under some labeling) with
/// `|E′| ≤ max_removed`. Returns roles and the deleted pairs.
pub fn recognize_member(g: &Graph, params: Params, max_removed: usize) -> Result<Option<(Vec<Role>, EdgeList)>> {
    check_order(g, params)?;
    // X vertices of B − E′ have degree δ and neighborhood exactly Y.
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..params.n {
        if g.degree(v) == params.delta {
            groups.entry(g.neighbors(v).collect()).or_default().push(v);
        }
    }
    for (y, members) in groups {
        if members.len() < params.x_size() {
            continue;
        }
        let roles = roles_from(params, &members[..params.x_size()], &y);
        if let Some(removed) = template_deletions(g, &roles, true, max_removed) {
            return Ok(Some((roles, removed)));
        }
    }
    Ok(None)
}

/// Recognition for the first family (`|E′| ≤ ⌊δ(δ+k)/4⌋`).
pub fn recognize_b1_member(g: &Graph, n: usize, k: usize, delta: usize) -> Result<Option<(Vec<Role>, EdgeList)>> {
    let params = Params::new(n, k, delta)?;
    recognize_member(g, params, params.b1_budget())
}

/// Exact threshold quantities for `(n, k, δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    /// `2(n − δ − k − 1)`.
    pub q_threshold: i64,
    /// `(δ² + kδ + 7δ + 6k + 9)(δ² + kδ + 1)`.
    pub n_min_theorem: u64,
    /// `8δ + 6k + 7`: smallest order the dense edge-count check covers.
    pub n_min_dense: u64,
    /// `½(n−k−δ−1)(n−k−δ−2) + (δ+k+1)(δ+1)`; the product of consecutive
    /// integers is even, so this is an integer.
    pub edge_threshold: i64,
    /// `⌊δ(δ+k)/4⌋`.
    pub e1_budget_b1: u64,
}

pub fn thresholds(n: usize, k: usize, delta: usize) -> Thresholds {
    let (ni, ki, di) = (n as i64, k as i64, delta as i64);
    let (ku, du) = (k as u64, delta as u64);
    let a = ni - ki - di - 1;
    Thresholds {
        n,
        k,
        delta,
        q_threshold: 2 * a,
        n_min_theorem: (du * du + ku * du + 7 * du + 6 * ku + 9) * (du * du + ku * du + 1),
        n_min_dense: 8 * du + 6 * ku + 7,
        edge_threshold: a * (a - 1) / 2 + (di + ki + 1) * (di + 1),
        e1_budget_b1: du * (du + ku) / 4,
    }
}
