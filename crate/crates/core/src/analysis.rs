//! Combinatorial cells, their intersections, and the checks that compare
//! them with the Hecke algebra side.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;

use crate::characters::{decompose, module_character, CharacterTable};
use crate::cycles::{non_core_extended_count, orbit};
use crate::error::{Error, Result};
use crate::hecke::module::cell_module_matrices;
use crate::hecke::properties::{check_properties, Property, PropertyResult};
use crate::hecke::{cache, AsymptoticData, CellPartition, KLTable, Side, WeightFunction};
use crate::insertion::{g_r, right_tableau};
use crate::partition::{Bipartition, Partition};
use crate::perm::SignedPermutation;
use crate::symbols::{
    bipartition_to_partition, induced_shape_set, partition_to_bipartition, WeightParams,
};
use crate::tableau::{count_tableaux, DominoTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Irreducible,
    Reducible,
}

#[derive(Clone, Debug, Serialize)]
pub struct CombinatorialCell {
    pub kind: CellKind,
    pub rank: usize,
    /// Sorted.
    pub members: Vec<SignedPermutation>,
    /// The representing set, sorted.
    pub tableaux: Vec<DominoTableau>,
}

impl CombinatorialCell {
    pub fn contains(&self, w: &SignedPermutation) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

/// The representing set of the cell of a tableau.
fn representing_set(t: &DominoTableau, kind: CellKind) -> Vec<DominoTableau> {
    let mut v = match kind {
        CellKind::Irreducible => vec![t.clone()],
        CellKind::Reducible => orbit(t),
    };
    v.sort();
    v.dedup();
    v
}

/// Partition of `W_n` into combinatorial left cells of rank `r`, blocks
/// sorted by their smallest member.
pub fn combinatorial_cells(n: usize, r: usize, kind: CellKind) -> Vec<CombinatorialCell> {
    let mut by_key: BTreeMap<DominoTableau, (Vec<DominoTableau>, Vec<SignedPermutation>)> =
        BTreeMap::new();
    let mut key_of: HashMap<DominoTableau, DominoTableau> = HashMap::new();
    for w in SignedPermutation::all(n) {
        let t = right_tableau(&w, r);
        let key = match key_of.get(&t) {
            Some(k) => k.clone(),
            None => {
                let set = representing_set(&t, kind);
                let k = set[0].clone();
                for u in &set {
                    key_of.insert(u.clone(), k.clone());
                }
                by_key.insert(k.clone(), (set, Vec::new()));
                k
            }
        };
        by_key.get_mut(&key).unwrap().1.push(w);
    }
    let mut cells: Vec<CombinatorialCell> = by_key
        .into_values()
        .map(|(tableaux, mut members)| {
            members.sort();
            CombinatorialCell {
                kind,
                rank: r,
                members,
                tableaux,
            }
        })
        .collect();
    cells.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    cells
}

/// The kind and rank attached to the weights: irreducible of rank `floor(s)`
/// when `s` is not an integer, reducible of rank `s - 1` otherwise.
pub fn regime(wp: &WeightParams) -> (CellKind, usize) {
    if wp.is_integral() {
        (CellKind::Reducible, wp.r)
    } else {
        (CellKind::Irreducible, wp.r)
    }
}

/// Shapes of the representing set, sorted.
pub fn predicted_module(cell: &CombinatorialCell) -> Vec<Partition> {
    let mut v: Vec<Partition> = cell.tableaux.iter().map(|t| t.shape().clone()).collect();
    v.sort();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionCount {
    /// `|C1 ∩ C2^{-1}|` by inverting members.
    pub explicit: usize,
    /// Tableaux of `C1` whose shape occurs in `C2`.
    pub shape_matches: usize,
    /// `2^m` from extended open cycles, for reducible cells sharing a shape.
    pub extended: Option<usize>,
}

impl IntersectionCount {
    pub fn consistent(&self) -> bool {
        self.explicit == self.shape_matches && self.extended.is_none_or(|e| e == self.explicit)
    }
}

pub fn intersection_count(c1: &CombinatorialCell, c2: &CombinatorialCell) -> Result<IntersectionCount> {
    if c1.rank != c2.rank {
        return Err(Error::RankMismatch {
            expected: c1.rank,
            found: c2.rank,
        });
    }
    let n1 = c1.members.first().map_or(0, SignedPermutation::n);
    let n2 = c2.members.first().map_or(0, SignedPermutation::n);
    if n1 != n2 {
        return Err(Error::SizeMismatch(n1, n2));
    }
    let explicit = c1
        .members
        .iter()
        .filter(|w| c2.contains(&w.inverse()))
        .count();
    let shapes2: HashMap<&Partition, &DominoTableau> =
        c2.tableaux.iter().map(|t| (t.shape(), t)).collect();
    let shape_matches = c1
        .tableaux
        .iter()
        .filter(|t| shapes2.contains_key(t.shape()))
        .count();
    let extended = if c1.kind == CellKind::Reducible && c2.kind == CellKind::Reducible {
        c1.tableaux
            .iter()
            .find_map(|t| shapes2.get(t.shape()).map(|t2| (t, *t2)))
            .map(|(t, t2)| non_core_extended_count(t, t2).map(|m| 1usize << m))
            .transpose()?
    } else {
        None
    };
    Ok(IntersectionCount {
        explicit,
        shape_matches,
        extended,
    })
}

/// First pair of shapes shared between two representing sets in the list.
pub fn shared_shape(cells: &[&CombinatorialCell]) -> Option<(usize, usize, Partition)> {
    for i in 0..cells.len() {
        let si: BTreeSet<&Partition> = cells[i].tableaux.iter().map(|t| t.shape()).collect();
        for (j, cj) in cells.iter().enumerate().skip(i + 1) {
            if let Some(p) = cj.tableaux.iter().map(|t| t.shape()).find(|p| si.contains(p)) {
                return Some((i, j, p.clone()));
            }
        }
    }
    None
}

/// Shapes of `MT(T, C)` for the right tableau `T` of `(w', n, ..., m+1)`,
/// next to the set predicted from the right tableau of `w'`.
pub fn induction_shapes(
    w1: &SignedPermutation,
    l: usize,
    r: usize,
) -> (BTreeSet<Partition>, BTreeSet<Partition>) {
    let m = w1.n();
    let n = m + l;
    let mut win = w1.window().to_vec();
    win.extend((m as i32 + 1..=n as i32).rev());
    let w = SignedPermutation::new(win).expect("valid window");
    let shapes = |t: &DominoTableau| -> BTreeSet<Partition> {
        orbit(t).iter().map(|u| u.shape().clone()).collect()
    };
    let direct = shapes(&right_tableau(&w, r));
    let predicted = induced_shape_set(&shapes(&right_tableau(w1, r)), l, r);
    (direct, predicted)
}

// ---------------------------------------------------------------------------
// verification against the Hecke algebra

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub cache_dir: Option<PathBuf>,
    pub max_n_kl: usize,
    pub max_n_asymptotic: usize,
    /// Record wall-clock times in the report.
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cache_dir: None,
            max_n_kl: 4,
            max_n_asymptotic: crate::hecke::asymptotic::DEFAULT_MAX_N,
            timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheStatus {
    Hit,
    Miss,
    Disabled,
}

/// A KL table with its left cells and the data shared by every check.
pub struct Session {
    pub n: usize,
    pub weight: WeightFunction,
    pub params: WeightParams,
    pub table: KLTable,
    pub left: CellPartition,
    pub cache: CacheStatus,
    pub table_ms: u128,
}

impl Session {
    pub fn new(n: usize, a: u32, b: u32, opts: &VerifyOptions) -> Result<Self> {
        let weight = WeightFunction::new(a, b)?;
        let params = WeightParams::new(a, b)?;
        let start = Instant::now();
        let cache = match &opts.cache_dir {
            None => CacheStatus::Disabled,
            Some(d) if cache::cache_path(d, n, &weight).exists() => CacheStatus::Hit,
            Some(_) => CacheStatus::Miss,
        };
        let table = cache::load_or_compute(opts.cache_dir.as_deref(), n, weight, opts.max_n_kl)?;
        let left = CellPartition::compute(&table, Side::Left);
        Ok(Session {
            n,
            weight,
            params,
            table,
            left,
            cache,
            table_ms: start.elapsed().as_millis(),
        })
    }

    fn element(&self, x: usize) -> &SignedPermutation {
        self.table.group.element(x)
    }

    /// Hecke left cells as sorted element lists, blocks sorted by their
    /// smallest element.
    pub fn hecke_blocks(&self) -> Vec<Vec<SignedPermutation>> {
        let mut b = self.left.blocks(&self.table);
        b.sort_by(|x, y| x[0].cmp(&y[0]));
        b
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub s: String,
    pub r: usize,
    pub epsilon: String,
    pub kind: CellKind,
}

impl Params {
    pub fn new(n: usize, wp: &WeightParams) -> Self {
        Params {
            n,
            a: wp.a,
            b: wp.b,
            s: wp.s.to_string(),
            r: wp.r,
            epsilon: wp.epsilon.to_string(),
            kind: regime(wp).0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub w: SignedPermutation,
    pub w2: SignedPermutation,
    pub same_hecke_cell: bool,
    pub same_combinatorial_cell: bool,
    pub right_tableau_w: DominoTableau,
    pub right_tableau_w2: DominoTableau,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureResult {
    pub passed: bool,
    pub hecke_cells: usize,
    pub combinatorial_cells: usize,
    /// For integral `s`: shape sets of the combinatorial cells inside each
    /// Hecke cell are pairwise disjoint.
    pub disjoint_shapes: Option<bool>,
    pub mismatch: Option<Mismatch>,
}

pub fn verify_conjecture(session: &Session) -> ConjectureResult {
    let (kind, r) = regime(&session.params);
    let comb = combinatorial_cells(session.n, r, kind);
    let g = &session.table.group;
    let mut comb_of = vec![0usize; g.len()];
    for (i, c) in comb.iter().enumerate() {
        for w in &c.members {
            comb_of[g.index_of(w).expect("element of W_n")] = i;
        }
    }
    // the smallest offending pair in window order
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by(|&x, &y| g.element(x).cmp(g.element(y)));
    let mut mismatch = None;
    'outer: for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            let h = session.left.same(x, y);
            let c = comb_of[x] == comb_of[y];
            if h != c {
                let (w, w2) = (session.element(x).clone(), session.element(y).clone());
                mismatch = Some(Mismatch {
                    right_tableau_w: right_tableau(&w, r),
                    right_tableau_w2: right_tableau(&w2, r),
                    w,
                    w2,
                    same_hecke_cell: h,
                    same_combinatorial_cell: c,
                });
                break 'outer;
            }
        }
    }
    let disjoint_shapes = session.params.is_integral().then(|| {
        session.left.members.iter().all(|m| {
            let inside: BTreeSet<usize> = m.iter().map(|&x| comb_of[x]).collect();
            let cells: Vec<&CombinatorialCell> = inside.iter().map(|&i| &comb[i]).collect();
            shared_shape(&cells).is_none()
        })
    });
    ConjectureResult {
        passed: mismatch.is_none(),
        hecke_cells: session.left.len(),
        combinatorial_cells: comb.len(),
        disjoint_shapes,
        mismatch,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellModule {
    /// Smallest element of the cell.
    pub representative: SignedPermutation,
    pub size: usize,
    pub computed: Vec<(Bipartition, u64)>,
    pub computed_shapes: Vec<Partition>,
    pub predicted_shapes: Vec<Partition>,
    pub matches: bool,
    pub multiplicity_free: bool,
    /// Elements with a given right tableau number the degree of its shape.
    pub tableau_counts_match_degrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModulesResult {
    pub passed: bool,
    pub cells: Vec<CellModule>,
}

/// Character of every left cell module, in block order.
pub fn cell_characters(session: &Session) -> Result<Vec<Vec<i64>>> {
    session
        .left
        .members
        .iter()
        .map(|m| {
            let mats = cell_module_matrices(&session.table, &session.left, m)?;
            module_character(&mats, session.n)
        })
        .collect()
}

pub fn verify_module_structure(session: &Session, ct: &CharacterTable) -> Result<ModulesResult> {
    let r = session.params.r;
    let chars = cell_characters(session)?;
    let mut cells = Vec::new();
    for (m, chi) in session.left.members.iter().zip(&chars) {
        let computed = decompose(chi, ct)?;
        let mut computed_shapes: Vec<Partition> = computed
            .iter()
            .flat_map(|(bp, k)| std::iter::repeat_n(bipartition_to_partition(bp, r), *k as usize))
            .collect();
        computed_shapes.sort();
        let mut by_tableau: BTreeMap<DominoTableau, usize> = BTreeMap::new();
        for &x in m {
            *by_tableau.entry(right_tableau(session.element(x), r)).or_default() += 1;
        }
        let mut predicted_shapes: Vec<Partition> =
            by_tableau.keys().map(|t| t.shape().clone()).collect();
        predicted_shapes.sort();
        let tableau_counts_match_degrees = by_tableau.iter().all(|(t, &c)| {
            let deg = partition_to_bipartition(t.shape()).degree();
            c as u128 == deg && count_tableaux(t.shape()) == deg
        });
        let multiplicity_free = computed.iter().all(|(_, k)| *k == 1);
        let representative = m
            .iter()
            .map(|&x| session.element(x))
            .min()
            .expect("cells are nonempty")
            .clone();
        cells.push(CellModule {
            representative,
            size: m.len(),
            matches: computed_shapes == predicted_shapes,
            computed,
            computed_shapes,
            predicted_shapes,
            multiplicity_free,
            tableau_counts_match_degrees,
        });
    }
    cells.sort_by(|a, b| a.representative.cmp(&b.representative));
    let passed = cells
        .iter()
        .all(|c| c.matches && c.multiplicity_free && c.tableau_counts_match_degrees);
    Ok(ModulesResult { passed, cells })
}

#[derive(Clone, Debug, Serialize)]
pub struct HomResult {
    pub passed: bool,
    /// Cells in the order of `representatives`.
    pub representatives: Vec<SignedPermutation>,
    /// `dim Hom([C_i], [C_j])` from characters.
    pub hom: Vec<Vec<u64>>,
    /// `|C_i ∩ C_j^{-1}|`.
    pub intersections: Vec<Vec<u64>>,
    pub diagonal_is_involution_count: bool,
    pub total: u64,
    pub group_order: u64,
}

pub fn verify_hom_dims(session: &Session, ct: &CharacterTable) -> Result<HomResult> {
    let g = &session.table.group;
    let chars = cell_characters(session)?;
    let mut idx: Vec<usize> = (0..session.left.len()).collect();
    let rep = |b: usize| {
        session.left.members[b]
            .iter()
            .map(|&x| g.element(x))
            .min()
            .unwrap()
    };
    idx.sort_by(|&x, &y| rep(x).cmp(rep(y)));
    let order = ct.order() as i128;
    let k = idx.len();
    let mut hom = vec![vec![0u64; k]; k];
    let mut inter = vec![vec![0u64; k]; k];
    for (i, &bi) in idx.iter().enumerate() {
        for (j, &bj) in idx.iter().enumerate() {
            let p = ct.pairing(&chars[bi], &chars[bj]);
            if p % order != 0 || p < 0 {
                return Err(Error::Character(format!("hom dimension {}/{}", p, order)));
            }
            hom[i][j] = (p / order) as u64;
            inter[i][j] = session.left.members[bi]
                .iter()
                .filter(|&&x| session.left.block_of[g.inverse[x]] == bj)
                .count() as u64;
        }
    }
    let diagonal_is_involution_count = idx.iter().enumerate().all(|(i, &b)| {
        let inv = session.left.members[b]
            .iter()
            .filter(|&&x| g.inverse[x] == x)
            .count() as u64;
        inter[i][i] == inv
    });
    let total: u64 = inter.iter().flatten().sum();
    let group_order = g.len() as u64;
    Ok(HomResult {
        passed: hom == inter && diagonal_is_involution_count && total == group_order,
        representatives: idx.iter().map(|&b| rep(b).clone()).collect(),
        hom,
        intersections: inter,
        diagonal_is_involution_count,
        total,
        group_order,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertiesResult {
    /// The weights fall in a case where the properties are known to hold.
    pub gating: bool,
    pub passed: bool,
    pub results: Vec<PropertyResult>,
}

/// Equal parameters, or `b > (n-1) a`.
pub fn properties_known(n: usize, wf: &WeightFunction) -> bool {
    wf.a == wf.b || wf.b as u64 > (n.saturating_sub(1) as u64) * wf.a as u64
}

pub fn verify_properties(session: &Session, opts: &VerifyOptions) -> Result<PropertiesResult> {
    let (data, _) = AsymptoticData::compute(&session.table, opts.max_n_asymptotic)?;
    let results = check_properties(&session.table, &data, &Property::ALL);
    Ok(PropertiesResult {
        gating: properties_known(session.n, &session.weight),
        passed: results.iter().all(|r| r.passed),
        results,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Conjecture,
    Modules,
    Hom,
    Properties,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Conjecture, Check::Modules, Check::Hom, Check::Properties];
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cache: Option<CacheStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub params: Params,
    pub conjecture: Option<ConjectureResult>,
    pub modules: Option<ModulesResult>,
    pub hom: Option<HomResult>,
    pub properties: Option<PropertiesResult>,
    pub timings: Timings,
}

impl VerificationReport {
    /// Every requested check passed. Properties only count when `gating`.
    pub fn passed(&self) -> bool {
        self.conjecture.as_ref().is_none_or(|c| c.passed && c.disjoint_shapes != Some(false))
            && self.modules.as_ref().is_none_or(|m| m.passed)
            && self.hom.as_ref().is_none_or(|h| h.passed)
            && self
                .properties
                .as_ref()
                .is_none_or(|p| p.passed || !p.gating)
    }

    pub const CSV_HEADER: &'static str = "n,a,b,s,r,conjecture,modules,hom,properties,passed";

    /// One CSV row; skipped checks are empty, non-gating property failures
    /// read `diagnostic`.
    pub fn csv_row(&self) -> String {
        let flag = |x: Option<bool>| match x {
            None => String::new(),
            Some(true) => "pass".into(),
            Some(false) => "fail".into(),
        };
        let props = match &self.properties {
            None => String::new(),
            Some(p) if p.passed => "pass".into(),
            Some(p) if p.gating => "fail".into(),
            Some(_) => "diagnostic".into(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.params.n,
            self.params.a,
            self.params.b,
            self.params.s,
            self.params.r,
            flag(self.conjecture.as_ref().map(|c| c.passed)),
            flag(self.modules.as_ref().map(|m| m.passed)),
            flag(self.hom.as_ref().map(|h| h.passed)),
            props,
            flag(Some(self.passed()))
        )
    }
}

pub fn run_verification(
    n: usize,
    a: u32,
    b: u32,
    checks: &[Check],
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let session = Session::new(n, a, b, opts)?;
    let start = Instant::now();
    let wants = |c: Check| checks.contains(&c);
    let ct = if wants(Check::Modules) || wants(Check::Hom) {
        Some(CharacterTable::new(n)?)
    } else {
        None
    };
    let conjecture = wants(Check::Conjecture).then(|| verify_conjecture(&session));
    let modules = match &ct {
        Some(ct) if wants(Check::Modules) => Some(verify_module_structure(&session, ct)?),
        _ => None,
    };
    let hom = match &ct {
        Some(ct) if wants(Check::Hom) => Some(verify_hom_dims(&session, ct)?),
        _ => None,
    };
    let properties = if wants(Check::Properties) {
        Some(verify_properties(&session, opts)?)
    } else {
        None
    };
    let timings = Timings {
        cache: opts.timings.then_some(session.cache),
        table_ms: opts.timings.then_some(session.table_ms),
        checks_ms: opts.timings.then(|| start.elapsed().as_millis()),
    };
    Ok(VerificationReport {
        params: Params::new(n, &session.params),
        conjecture,
        modules,
        hom,
        properties,
        timings,
    })
}

/// Sorted shape multisets of all left cell modules, read off the computed
/// characters.
pub fn cell_module_shapes(session: &Session, ct: &CharacterTable) -> Result<BTreeSet<Vec<Partition>>> {
    let r = session.params.r;
    let mut out = BTreeSet::new();
    for chi in cell_characters(session)? {
        let mut shapes: Vec<Partition> = decompose(&chi, ct)?
            .iter()
            .flat_map(|(bp, k)| std::iter::repeat_n(bipartition_to_partition(bp, r), *k as usize))
            .collect();
        shapes.sort();
        out.insert(shapes);
    }
    Ok(out)
}

/// Same-shape check of `G_r`: every pair of tableaux comes from exactly one
/// element. Returns the number of distinct pairs.
pub fn g_r_image_size(n: usize, r: usize) -> usize {
    let mut seen: HashSet<_> = HashSet::new();
    for w in SignedPermutation::all(n) {
        seen.insert(g_r(&w, r));
    }
    seen.len()
}
