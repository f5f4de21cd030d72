//! Oriented link diagrams with blackboard framing, and the surgeries used to
//! build satellites: parallel cabling, meridian insertion, deletion, reversal.
//!
//! A diagram is stored as the cyclic sequence of crossing passages along each
//! component together with the sign of every crossing. That determines the
//! planar-diagram code completely; [`PdCode`] is the exchange form.

mod pd;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

pub(crate) use pd::{Pd, Xing};

/// One visit of a component to a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

/// Problems found when checking a planar-diagram code.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramIssue {
    #[error("edge {edge} appears {count} times (expected 2)")]
    EdgeCount { edge: u32, count: usize },
    #[error("edge {edge} has no component")]
    UnknownEdge { edge: u32 },
    #[error("edge {edge} belongs to component {comp} but appears at no crossing")]
    UnusedEdge { edge: u32, comp: usize },
    #[error("edge {edge} assigned to nonexistent component {comp}")]
    BadComponent { edge: u32, comp: usize },
    #[error("edges of component {comp} are not consecutive")]
    NonConsecutive { comp: usize },
    #[error("component {comp} has {count} free loops")]
    FreeLoops { comp: usize, count: u32 },
    #[error("crossing {crossing}: under strand does not continue from slot 0 to slot 2")]
    UnderStrand { crossing: usize },
    #[error("crossing {crossing}: over strand edges are not consecutive")]
    OverStrand { crossing: usize },
    #[error("edge {edge} cannot be consistently oriented")]
    Orientation { edge: u32 },
    #[error("diagram is not planar: {faces} faces, expected {expected}")]
    NotPlanar { faces: usize, expected: usize },
    #[error("crossing {crossing}: stored sign disagrees with orientations")]
    SignMismatch { crossing: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid diagram: {}", .0.first().map(|i| alloc::format!("{i}")).unwrap_or_default())]
    Invalid(Vec<DiagramIssue>),
    #[error("no component {0}")]
    NoComponent(usize),
    #[error("cable width must be at least 1")]
    ZeroWidth,
    #[error("component {comp} has no passage {passage}")]
    NoPassage { comp: usize, passage: usize },
    #[error("no tracked bundle {0}")]
    NoBundle(usize),
    #[error("edges {0:?} are not a tracked bundle")]
    NotABundle(Vec<u32>),
    #[error("bundle {0} is empty")]
    EmptyBundle(usize),
}

/// Planar-diagram code: crossings `[a, b, c, d]` counterclockwise from the
/// incoming under edge, edges numbered consecutively along each component,
/// components numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PdCode {
    pub components: usize,
    pub crossings: Vec<[u32; 4]>,
    pub component_of_edge: BTreeMap<u32, usize>,
    pub free_loops: BTreeMap<usize, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub components: usize,
    pub crossings: usize,
    pub self_writhe: Vec<i64>,
    pub writhe: i64,
}

/// A point on a component: the edge arriving at a passage, or anywhere on a
/// crossingless component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Site {
    comp: usize,
    arrive: Option<usize>,
}

/// Geometrically parallel strands at one place, left to right when looking
/// along the first strand's direction; the flag says whether a strand runs
/// the same way as that reference.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Bundle {
    strands: Vec<(Site, bool)>,
}

pub type BundleId = usize;

/// Oriented, blackboard-framed link diagram.
///
/// Components are numbered from 1 in the public API. Equality compares the
/// diagram only, not tracked bundles.
#[derive(Clone, Debug, Default)]
pub struct LinkDiagram {
    comps: Vec<Vec<Passage>>,
    positive: Vec<bool>,
    bundles: Vec<Bundle>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.comps == other.comps && self.positive == other.positive
    }
}

impl Eq for LinkDiagram {}

impl LinkDiagram {
    /// The empty diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    /// `n` crossingless, unlinked circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram { comps: vec![Vec::new(); n], ..Self::default() }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn component_count(&self) -> usize {
        self.comps.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.positive.len()
    }

    pub fn sign(&self, crossing: usize) -> i64 {
        if self.positive[crossing] {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|x| self.sign(x)).sum()
    }

    /// Passages of component `comp` (1-based) in order of travel.
    pub fn passages(&self, comp: usize) -> Result<&[Passage], DiagramError> {
        Ok(&self.comps[self.index(comp)?])
    }

    fn index(&self, comp: usize) -> Result<usize, DiagramError> {
        if comp >= 1 && comp <= self.comps.len() {
            Ok(comp - 1)
        } else {
            Err(DiagramError::NoComponent(comp))
        }
    }

    /// For every crossing, the 0-based components of its (under, over) strands.
    fn strands(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.crossing_count()];
        for (c, ps) in self.comps.iter().enumerate() {
            for p in ps {
                if p.over {
                    out[p.crossing].1 = c;
                } else {
                    out[p.crossing].0 = c;
                }
            }
        }
        out
    }

    /// `(self crossings, mixed crossings)` of component `comp` (1-based).
    pub fn crossing_census(&self, comp: usize) -> Result<(usize, usize), DiagramError> {
        let c = self.index(comp)?;
        let mut own = 0;
        let mut mixed = 0;
        for (u, o) in self.strands() {
            if u == c && o == c {
                own += 1;
            } else if u == c || o == c {
                mixed += 1;
            }
        }
        Ok((own, mixed))
    }

    pub fn self_writhe(&self, comp: usize) -> Result<i64, DiagramError> {
        let c = self.index(comp)?;
        Ok(self
            .strands()
            .iter()
            .enumerate()
            .filter(|(_, &(u, o))| u == c && o == c)
            .map(|(x, _)| self.sign(x))
            .sum())
    }

    /// Linking number of two distinct components (1-based).
    pub fn linking_number(&self, a: usize, b: usize) -> Result<i64, DiagramError> {
        let (a, b) = (self.index(a)?, self.index(b)?);
        let twice: i64 = self
            .strands()
            .iter()
            .enumerate()
            .filter(|(_, &(u, o))| (u == a && o == b) || (u == b && o == a))
            .map(|(x, _)| self.sign(x))
            .sum();
        Ok(twice / 2)
    }

    // ---- planar-diagram codes ----

    /// Edge numbers: component `c` with `m` passages owns `base+1..=base+m`,
    /// and edge `base+1+i` arrives at passage `i`.
    fn edge_bases(&self) -> Vec<u32> {
        let mut bases = Vec::with_capacity(self.comps.len());
        let mut b = 0u32;
        for ps in &self.comps {
            bases.push(b);
            b += ps.len() as u32;
        }
        bases
    }

    pub fn to_pd(&self) -> PdCode {
        let bases = self.edge_bases();
        let mut crossings = vec![[0u32; 4]; self.crossing_count()];
        let mut component_of_edge = BTreeMap::new();
        let mut free_loops = BTreeMap::new();
        for (c, ps) in self.comps.iter().enumerate() {
            let m = ps.len() as u32;
            if m == 0 {
                free_loops.insert(c + 1, 1);
            }
            for (i, p) in ps.iter().enumerate() {
                let i = i as u32;
                let incoming = bases[c] + 1 + i;
                let outgoing = bases[c] + 1 + (i + 1) % m;
                component_of_edge.insert(incoming, c + 1);
                let slots = &mut crossings[p.crossing];
                match (p.over, self.positive[p.crossing]) {
                    (false, _) => {
                        slots[0] = incoming;
                        slots[2] = outgoing;
                    }
                    (true, true) => {
                        slots[3] = incoming;
                        slots[1] = outgoing;
                    }
                    (true, false) => {
                        slots[1] = incoming;
                        slots[3] = outgoing;
                    }
                }
            }
        }
        PdCode { components: self.comps.len(), crossings, component_of_edge, free_loops }
    }

    pub fn from_pd(code: &PdCode) -> Result<Self, DiagramError> {
        parse_pd(code).map_err(DiagramError::Invalid)
    }

    /// Re-derives the diagram from its own code and checks every invariant.
    pub fn validate(&self) -> Result<ValidationReport, DiagramError> {
        let back = Self::from_pd(&self.to_pd())?;
        let mut issues = Vec::new();
        for x in 0..self.crossing_count() {
            if back.positive[x] != self.positive[x] {
                issues.push(DiagramIssue::SignMismatch { crossing: x });
            }
        }
        if back.comps != self.comps {
            issues.push(DiagramIssue::Orientation { edge: 0 });
        }
        if !issues.is_empty() {
            return Err(DiagramError::Invalid(issues));
        }
        Ok(self.report())
    }

    fn report(&self) -> ValidationReport {
        let self_writhe = (1..=self.comps.len()).map(|c| self.self_writhe(c).unwrap()).collect();
        ValidationReport {
            components: self.comps.len(),
            crossings: self.crossing_count(),
            self_writhe,
            writhe: self.writhe(),
        }
    }

    pub(crate) fn to_internal(&self) -> Pd {
        let code = self.to_pd();
        let xs = code
            .crossings
            .iter()
            .enumerate()
            .map(|(x, e)| Xing { e: *e, pos: self.positive[x] })
            .collect();
        Pd::new(xs, code.free_loops.len() as u32)
    }

    // ---- bundles ----

    /// Starts tracking the point of `comp` (1-based) on the edge arriving at
    /// `passage`; crossingless components take `None`.
    pub fn track_site(
        &self,
        comp: usize,
        passage: Option<usize>,
    ) -> Result<(LinkDiagram, BundleId), DiagramError> {
        let c = self.index(comp)?;
        let m = self.comps[c].len();
        let arrive = match (m, passage) {
            (0, _) => None,
            (_, None) => Some(0),
            (_, Some(p)) if p < m => Some(p),
            (_, Some(p)) => return Err(DiagramError::NoPassage { comp, passage: p }),
        };
        let mut out = self.clone();
        out.bundles.push(Bundle { strands: vec![(Site { comp: c, arrive }, true)] });
        Ok((out, self.bundles.len()))
    }

    /// Tracks some strands of an existing bundle (positions counted left to
    /// right) as a bundle of their own, at the same place and with the same
    /// reference direction.
    pub fn track_sub_bundle(
        &self,
        id: BundleId,
        positions: &[usize],
    ) -> Result<(LinkDiagram, BundleId), DiagramError> {
        let strands = &self.bundle(id)?.strands;
        let mut picked = Vec::with_capacity(positions.len());
        for &i in positions {
            picked.push(*strands.get(i).ok_or(DiagramError::NoBundle(id))?);
        }
        let mut out = self.clone();
        out.bundles.push(Bundle { strands: picked });
        Ok((out, self.bundles.len()))
    }

    pub fn bundle_width(&self, id: BundleId) -> Result<usize, DiagramError> {
        Ok(self.bundle(id)?.strands.len())
    }

    /// Components (1-based) of the strands of a bundle, left to right.
    pub fn bundle_components(&self, id: BundleId) -> Result<Vec<usize>, DiagramError> {
        Ok(self.bundle(id)?.strands.iter().map(|(s, _)| s.comp + 1).collect())
    }

    /// Edge numbers (as in [`LinkDiagram::to_pd`]) of a bundle's strands;
    /// crossingless strands have no edge and are skipped.
    pub fn bundle_edges(&self, id: BundleId) -> Result<Vec<u32>, DiagramError> {
        let bases = self.edge_bases();
        Ok(self
            .bundle(id)?
            .strands
            .iter()
            .filter_map(|(s, _)| s.arrive.map(|p| bases[s.comp] + 1 + p as u32))
            .collect())
    }

    fn bundle(&self, id: BundleId) -> Result<&Bundle, DiagramError> {
        self.bundles.get(id).ok_or(DiagramError::NoBundle(id))
    }

    // ---- surgeries ----

    /// Blackboard `n`-parallel of component `comp`. Copy 0 keeps the index,
    /// copies `1..n` are appended as new components; copy `k` lies `k` steps
    /// to the right of the direction of travel.
    pub fn cable(&self, comp: usize, n: usize) -> Result<LinkDiagram, DiagramError> {
        let c = self.index(comp)?;
        if n == 0 {
            return Err(DiagramError::ZeroWidth);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let strands = self.strands();
        let width = |x: usize, over: bool| {
            let (u, o) = strands[x];
            if (if over { o } else { u }) == c {
                n
            } else {
                1
            }
        };
        // Grid crossing X_{i,j}: under copy i, over copy j.
        let mut base = Vec::with_capacity(self.crossing_count());
        let mut positive = Vec::new();
        for x in 0..self.crossing_count() {
            base.push(positive.len());
            let cells = width(x, false) * width(x, true);
            positive.extend(core::iter::repeat_n(self.positive[x], cells));
        }
        let grid = |x: usize, i: usize, j: usize| base[x] + i * width(x, true) + j;
        // Passages of one copy of a component, plus where each old passage starts.
        let expand = |ps: &[Passage], k: usize| -> (Vec<Passage>, Vec<usize>) {
            let mut out = Vec::new();
            let mut starts = Vec::with_capacity(ps.len());
            for p in ps {
                starts.push(out.len());
                let x = p.crossing;
                let pos = self.positive[x];
                if p.over {
                    let nu = width(x, false);
                    let order: Vec<usize> = if pos { (0..nu).collect() } else { (0..nu).rev().collect() };
                    out.extend(order.into_iter().map(|i| Passage { crossing: grid(x, i, k), over: true }));
                } else {
                    let no = width(x, true);
                    let order: Vec<usize> = if pos { (0..no).rev().collect() } else { (0..no).collect() };
                    out.extend(order.into_iter().map(|j| Passage { crossing: grid(x, k, j), over: false }));
                }
            }
            (out, starts)
        };
        let mut comps = Vec::with_capacity(self.comps.len() + n - 1);
        let mut starts = Vec::with_capacity(self.comps.len());
        for ps in &self.comps {
            let (out, st) = expand(ps, 0);
            comps.push(out);
            starts.push(st);
        }
        let first_new = comps.len();
        for k in 1..n {
            comps.push(expand(&self.comps[c], k).0);
        }
        let copy_index = |k: usize| if k == 0 { c } else { first_new + k - 1 };
        let bundles = self
            .bundles
            .iter()
            .map(|b| {
                let mut strands = Vec::new();
                for &(site, same) in &b.strands {
                    let arrive = site.arrive.map(|p| starts[site.comp][p]);
                    if site.comp == c {
                        let order: Vec<usize> = if same { (0..n).collect() } else { (0..n).rev().collect() };
                        for k in order {
                            strands.push((Site { comp: copy_index(k), arrive }, same));
                        }
                    } else {
                        strands.push((Site { comp: site.comp, arrive }, same));
                    }
                }
                Bundle { strands }
            })
            .collect();
        Ok(LinkDiagram { comps, positive, bundles })
    }

    /// Adds a meridian around a tracked bundle: it passes over every strand
    /// going one way and under every strand coming back, counterclockwise
    /// about the bundle. The meridian becomes the last component, and the
    /// bundle moves to the side of the meridian its reference strand heads to.
    pub fn insert_meridian(&self, id: BundleId) -> Result<LinkDiagram, DiagramError> {
        let bundle = self.bundle(id)?.clone();
        let w = bundle.strands.len();
        if w == 0 {
            return Err(DiagramError::EmptyBundle(id));
        }
        let mut out = self.clone();
        let first = out.positive.len();
        // L_k = first + 2k (meridian over), U_k = first + 2k + 1 (meridian under).
        for &(_, same) in &bundle.strands {
            out.positive.push(same);
            out.positive.push(same);
        }
        let mut mer = Vec::with_capacity(2 * w);
        mer.extend((0..w).map(|k| Passage { crossing: first + 2 * k, over: true }));
        mer.extend((0..w).rev().map(|k| Passage { crossing: first + 2 * k + 1, over: false }));
        out.comps.push(mer);
        let mut moved: Vec<(Site, Site)> = Vec::with_capacity(w);
        for (k, &(site, same)) in bundle.strands.iter().enumerate() {
            let l = Passage { crossing: first + 2 * k, over: false };
            let u = Passage { crossing: first + 2 * k + 1, over: true };
            let pair = if same { [l, u] } else { [u, l] };
            let ps = &mut out.comps[site.comp];
            let at = site.arrive.unwrap_or(0);
            ps.splice(at..at, pair);
            let arrive = match site.arrive {
                None => Some(0),
                Some(p) if same => Some(p + 2),
                Some(p) => Some(p),
            };
            moved.push((site, Site { comp: site.comp, arrive }));
        }
        for b in &mut out.bundles {
            for (site, _) in &mut b.strands {
                if let Some(&(_, to)) = moved.iter().find(|(from, _)| from == site) {
                    *site = to;
                } else if let Some(&(from, _)) = moved.iter().find(|(from, _)| from.comp == site.comp) {
                    // Another site on a strand that just received two passages.
                    site.arrive = match (site.arrive, from.arrive) {
                        (Some(q), Some(p)) if q >= p => Some(q + 2),
                        (None, _) => Some(0),
                        (q, _) => q,
                    };
                }
            }
        }
        Ok(out)
    }

    /// [`LinkDiagram::insert_meridian`] addressed by edge numbers: either the
    /// exact edge set of a tracked bundle, or a single edge.
    pub fn insert_meridian_at_edges(&self, edges: &[u32]) -> Result<LinkDiagram, DiagramError> {
        let want: BTreeSet<u32> = edges.iter().copied().collect();
        for id in 0..self.bundles.len() {
            let have: BTreeSet<u32> = self.bundle_edges(id)?.into_iter().collect();
            if !have.is_empty() && have == want && have.len() == self.bundle(id)?.strands.len() {
                return self.insert_meridian(id);
            }
        }
        if let [edge] = edges {
            let code = self.to_pd();
            if let Some(&comp) = code.component_of_edge.get(edge) {
                let base = self.edge_bases()[comp - 1];
                let (tracked, id) = self.track_site(comp, Some((edge - base - 1) as usize))?;
                return tracked.insert_meridian(id);
            }
        }
        Err(DiagramError::NotABundle(edges.to_vec()))
    }

    /// Removes a component; strands it crossed are spliced through.
    pub fn delete_component(&self, comp: usize) -> Result<LinkDiagram, DiagramError> {
        let c = self.index(comp)?;
        let strands = self.strands();
        let mut renumber = vec![usize::MAX; self.crossing_count()];
        let mut positive = Vec::new();
        for (x, &(u, o)) in strands.iter().enumerate() {
            if u != c && o != c {
                renumber[x] = positive.len();
                positive.push(self.positive[x]);
            }
        }
        let mut comps = Vec::with_capacity(self.comps.len() - 1);
        // For each old component, the new index of the passage an old edge now arrives at.
        let mut arrival_map: Vec<Vec<Option<usize>>> = Vec::with_capacity(self.comps.len());
        for (d, ps) in self.comps.iter().enumerate() {
            let kept: Vec<Passage> = ps
                .iter()
                .filter(|p| renumber[p.crossing] != usize::MAX)
                .map(|p| Passage { crossing: renumber[p.crossing], over: p.over })
                .collect();
            // Old edge arriving at passage i now arrives at the next surviving one.
            let m = ps.len();
            let mut new_index = vec![0; m];
            let mut count = 0;
            for (i, p) in ps.iter().enumerate() {
                new_index[i] = count;
                if renumber[p.crossing] != usize::MAX {
                    count += 1;
                }
            }
            let mut map = vec![None; m];
            if !kept.is_empty() {
                let mut next = None;
                for step in 0..2 * m {
                    let i = (2 * m - 1 - step) % m;
                    if renumber[ps[i].crossing] != usize::MAX {
                        next = Some(new_index[i]);
                    }
                    if step >= m {
                        map[i] = next;
                    }
                }
            }
            arrival_map.push(map);
            if d != c {
                comps.push(kept);
            }
        }
        let shift = |d: usize| if d > c { d - 1 } else { d };
        let bundles = self
            .bundles
            .iter()
            .map(|b| Bundle {
                strands: b
                    .strands
                    .iter()
                    .filter(|(s, _)| s.comp != c)
                    .map(|&(s, same)| {
                        let arrive = s.arrive.and_then(|p| arrival_map[s.comp][p]);
                        (Site { comp: shift(s.comp), arrive }, same)
                    })
                    .collect(),
            })
            .collect();
        Ok(LinkDiagram { comps, positive, bundles })
    }

    /// Reverses the orientation of the given components (1-based).
    pub fn reverse(&self, comps: &[usize]) -> Result<LinkDiagram, DiagramError> {
        let mut flip = vec![false; self.comps.len()];
        for &c in comps {
            flip[self.index(c)?] = true;
        }
        let mut out = self.clone();
        for (x, &(u, o)) in self.strands().iter().enumerate() {
            if flip[u] != flip[o] {
                out.positive[x] = !out.positive[x];
            }
        }
        for (c, ps) in out.comps.iter_mut().enumerate() {
            if flip[c] {
                ps.reverse();
            }
        }
        for b in &mut out.bundles {
            for (s, same) in &mut b.strands {
                if flip[s.comp] {
                    let m = self.comps[s.comp].len();
                    s.arrive = s.arrive.map(|p| (m - p) % m);
                    *same = !*same;
                }
            }
        }
        Ok(out)
    }

    /// Reverses every component.
    pub fn reverse_all(&self) -> LinkDiagram {
        let all: Vec<usize> = (1..=self.comps.len()).collect();
        self.reverse(&all).expect("all components exist")
    }

    /// Split union; components of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let off = self.crossing_count();
        let coff = self.comps.len();
        let mut out = self.clone();
        out.positive.extend_from_slice(&other.positive);
        out.comps.extend(other.comps.iter().map(|ps| {
            ps.iter().map(|p| Passage { crossing: p.crossing + off, over: p.over }).collect()
        }));
        out.bundles.extend(other.bundles.iter().map(|b| Bundle {
            strands: b
                .strands
                .iter()
                .map(|&(s, same)| (Site { comp: s.comp + coff, arrive: s.arrive }, same))
                .collect(),
        }));
        out
    }

    /// Adds a kink on `comp` (1-based) just before passage `at` (or anywhere on
    /// a crossingless component). `over_first` picks which way the strand
    /// first meets the new crossing.
    pub fn add_curl(
        &self,
        comp: usize,
        at: usize,
        positive: bool,
        over_first: bool,
    ) -> Result<LinkDiagram, DiagramError> {
        let c = self.index(comp)?;
        let m = self.comps[c].len();
        if at > m || (m > 0 && at == m) {
            return Err(DiagramError::NoPassage { comp, passage: at });
        }
        let mut out = self.clone();
        let x = out.positive.len();
        out.positive.push(positive);
        let pair = [Passage { crossing: x, over: over_first }, Passage { crossing: x, over: !over_first }];
        out.comps[c].splice(at..at, pair);
        for b in &mut out.bundles {
            for (s, _) in &mut b.strands {
                if s.comp == c {
                    s.arrive = match s.arrive {
                        None => Some(0),
                        Some(q) if q >= at => Some(q + 2),
                        q => q,
                    };
                }
            }
        }
        Ok(out)
    }

    /// Switches over and under at a crossing.
    pub fn switch_crossing(&self, crossing: usize) -> LinkDiagram {
        let mut out = self.clone();
        out.positive[crossing] = !out.positive[crossing];
        for ps in &mut out.comps {
            for p in ps.iter_mut() {
                if p.crossing == crossing {
                    p.over = !p.over;
                }
            }
        }
        out
    }

    /// Switches every crossing (the mirror image).
    pub fn mirror(&self) -> LinkDiagram {
        (0..self.crossing_count()).fold(self.clone(), |d, x| d.switch_crossing(x))
    }

    /// Minimal-relabeling encoding, invariant under renumbering edges and
    /// crossings that keeps the travel order along components.
    pub fn canonical_code(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for token in self.to_internal().full_code(true) {
            out.extend_from_slice(&token.to_le_bytes());
        }
        out
    }
}

fn parse_pd(code: &PdCode) -> Result<LinkDiagram, Vec<DiagramIssue>> {
    let mut issues = Vec::new();
    let k = code.components;
    // Edge occurrences as (crossing, slot).
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, slots) in code.crossings.iter().enumerate() {
        for (p, &e) in slots.iter().enumerate() {
            occ.entry(e).or_default().push((x, p));
        }
    }
    for (&e, places) in &occ {
        if places.len() != 2 {
            issues.push(DiagramIssue::EdgeCount { edge: e, count: places.len() });
        }
        if !code.component_of_edge.contains_key(&e) {
            issues.push(DiagramIssue::UnknownEdge { edge: e });
        }
    }
    let mut edges_of: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (&e, &c) in &code.component_of_edge {
        if c == 0 || c > k {
            issues.push(DiagramIssue::BadComponent { edge: e, comp: c });
            continue;
        }
        if !occ.contains_key(&e) {
            issues.push(DiagramIssue::UnusedEdge { edge: e, comp: c });
        }
        edges_of[c - 1].push(e);
    }
    for (c, es) in edges_of.iter().enumerate() {
        if let (Some(&lo), Some(&hi)) = (es.first(), es.last()) {
            if (hi - lo) as usize + 1 != es.len() {
                issues.push(DiagramIssue::NonConsecutive { comp: c + 1 });
            }
        }
        let loops = code.free_loops.get(&(c + 1)).copied().unwrap_or(0);
        let want = if es.is_empty() { 1 } else { 0 };
        if loops != want {
            issues.push(DiagramIssue::FreeLoops { comp: c + 1, count: loops });
        }
    }
    for (&c, &count) in &code.free_loops {
        if c == 0 || c > k {
            issues.push(DiagramIssue::FreeLoops { comp: c, count });
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }
    let succ = |e: u32| -> u32 {
        let es = &edges_of[code.component_of_edge[&e] - 1];
        if e == *es.last().unwrap() {
            es[0]
        } else {
            e + 1
        }
    };
    // Orientation of the over strand: Some(true) when it runs d -> b (positive).
    let n = code.crossings.len();
    let mut positive: Vec<Option<bool>> = vec![None; n];
    for (x, &[a, b, c, d]) in code.crossings.iter().enumerate() {
        if succ(a) != c {
            issues.push(DiagramIssue::UnderStrand { crossing: x });
        }
        match (succ(d) == b, succ(b) == d) {
            (true, false) => positive[x] = Some(true),
            (false, true) => positive[x] = Some(false),
            (false, false) => issues.push(DiagramIssue::OverStrand { crossing: x }),
            (true, true) => {}
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }
    // Ambiguous over strands live on two-edge components; every edge must have
    // exactly one incoming end, which decides them.
    let incoming_at = |x: usize, p: usize, positive: &[Option<bool>]| -> Option<bool> {
        match p {
            0 => Some(true),
            2 => Some(false),
            1 => positive[x].map(|pos| !pos),
            _ => positive[x],
        }
    };
    loop {
        let mut progress = false;
        let mut pending = None;
        for x in 0..n {
            if positive[x].is_some() {
                continue;
            }
            pending.get_or_insert(x);
            for p in [1usize, 3] {
                let e = code.crossings[x][p];
                // The other end may sit at this same crossing (a curl); it
                // still decides things when it is on the under strand.
                let other = occ[&e].iter().copied().find(|&(y, q)| (y, q) != (x, p)).unwrap();
                if let Some(inc) = incoming_at(other.0, other.1, &positive) {
                    // This end is incoming iff the other is not.
                    let here_incoming = !inc;
                    positive[x] = Some((p == 3) == here_incoming);
                    progress = true;
                    break;
                }
            }
        }
        match (progress, pending) {
            (_, None) => break,
            (true, _) => continue,
            (false, Some(x)) => {
                // A two-edge component lying over everything it meets: its
                // smaller edge is taken as incoming at its first crossing.
                let [_, b, _, d] = code.crossings[x];
                positive[x] = Some(d < b);
            }
        }
    }
    for (&e, places) in &occ {
        let heads = places.iter().filter(|&&(x, p)| incoming_at(x, p, &positive) == Some(true)).count();
        if heads != 1 {
            issues.push(DiagramIssue::Orientation { edge: e });
        }
    }
    if !issues.is_empty() {
        return Err(issues);
    }
    let positive: Vec<bool> = positive.into_iter().map(|p| p.unwrap()).collect();
    let mut head: BTreeMap<u32, Passage> = BTreeMap::new();
    for (x, slots) in code.crossings.iter().enumerate() {
        let in_over = if positive[x] { 3 } else { 1 };
        head.insert(slots[0], Passage { crossing: x, over: false });
        head.insert(slots[in_over], Passage { crossing: x, over: true });
    }
    let comps: Vec<Vec<Passage>> = edges_of.iter().map(|es| es.iter().map(|e| head[e]).collect()).collect();
    let out = LinkDiagram { comps, positive, bundles: Vec::new() };
    let pd = out.to_internal();
    let (faces, expected) = pd.euler_faces();
    if faces != expected {
        return Err(vec![DiagramIssue::NotPlanar { faces, expected }]);
    }
    Ok(out)
}
