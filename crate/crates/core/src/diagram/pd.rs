//! Working representation for skein evaluation: crossings as four edge labels
//! counterclockwise from the incoming under edge, plus a count of free loops.
//! Labels are kept compact (`0..2n`) so per-edge tables are plain vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Xing {
    pub e: [u32; 4],
    pub pos: bool,
}

impl Xing {
    /// Whether slot `p` carries the edge entering the crossing.
    fn incoming(&self, p: usize) -> bool {
        match p {
            0 => true,
            2 => false,
            1 => !self.pos,
            _ => self.pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Pd {
    xs: Vec<Xing>,
    loops: u32,
}

/// A face with two corners, at crossings `x1 != x2`. Edge `a` runs from slot
/// `qa` of `x1` to slot `pa` of `x2`; edge `b` from slot `qb` of `x2` to slot
/// `pb` of `x1`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Bigon {
    pub x1: usize,
    pub qa: usize,
    pub x2: usize,
    pub pa: usize,
    pub qb: usize,
    pub pb: usize,
}

impl Bigon {
    /// One strand passes over at both corners: removable by a Reidemeister II move.
    pub fn is_rii(&self) -> bool {
        self.qa % 2 == self.pa % 2
    }
}

impl Pd {
    pub fn new(xs: Vec<Xing>, loops: u32) -> Self {
        let mut pd = Pd { xs, loops };
        pd.compact();
        pd
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn xs(&self) -> &[Xing] {
        &self.xs
    }

    pub fn sign(&self, x: usize) -> i32 {
        if self.xs[x].pos {
            1
        } else {
            -1
        }
    }

    pub fn incoming(&self, x: usize, p: usize) -> bool {
        self.xs[x].incoming(p)
    }

    /// Walking a knot from an arrival at `(x, p)`, the crossings first met
    /// from below, in order.
    pub fn descending_defects(&self, x: usize, p: usize) -> Vec<usize> {
        let occ = self.occ();
        let mut seen = vec![false; self.n()];
        let mut bad = Vec::new();
        let (mut cx, mut cp) = (x, p);
        loop {
            if !seen[cx] {
                seen[cx] = true;
                if cp % 2 == 0 {
                    bad.push(cx);
                }
            }
            let (y, q) = Self::across(&occ, &self.xs, cx, (cp + 2) % 4);
            cx = y;
            cp = q;
            if (cx, cp) == (x, p) {
                return bad;
            }
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.n()).map(|x| self.sign(x)).sum()
    }

    fn compact(&mut self) {
        let max = self.xs.iter().flat_map(|x| x.e).max().map(|m| m as usize + 1).unwrap_or(0);
        let mut map = vec![u32::MAX; max];
        let mut next = 0;
        for x in &mut self.xs {
            for e in &mut x.e {
                let slot = &mut map[*e as usize];
                if *slot == u32::MAX {
                    *slot = next;
                    next += 1;
                }
                *e = *slot;
            }
        }
    }

    /// Both ends `(crossing, slot)` of every edge label.
    pub fn occ(&self) -> Vec<[(u32, u8); 2]> {
        let mut out = vec![[(u32::MAX, 0u8); 2]; 2 * self.n()];
        for (x, xi) in self.xs.iter().enumerate() {
            for (p, &e) in xi.e.iter().enumerate() {
                let cell = &mut out[e as usize];
                let k = if cell[0].0 == u32::MAX { 0 } else { 1 };
                cell[k] = (x as u32, p as u8);
            }
        }
        out
    }

    /// The far end of the edge leaving `(x, p)`.
    fn across(occ: &[[(u32, u8); 2]], xs: &[Xing], x: usize, p: usize) -> (usize, usize) {
        let [a, b] = occ[xs[x].e[p] as usize];
        let (y, q) = if (a.0 as usize, a.1 as usize) == (x, p) { b } else { a };
        (y as usize, q as usize)
    }

    // ---- local moves ----

    pub fn switch(&self, x: usize) -> Pd {
        let mut out = self.clone();
        let [e0, e1, e2, e3] = self.xs[x].e;
        out.xs[x] = if self.xs[x].pos {
            Xing { e: [e3, e0, e1, e2], pos: false }
        } else {
            Xing { e: [e1, e2, e3, e0], pos: true }
        };
        out
    }

    /// Deletes crossings and then connects edge ends pairwise; a pair whose
    /// ends are already the same edge closes into a free loop.
    fn remove_and_join(&self, remove: &[usize], pairs: &[(u32, u32)]) -> Pd {
        let mut xs: Vec<Xing> = self
            .xs
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, x)| *x)
            .collect();
        let mut loops = self.loops;
        let mut pairs = pairs.to_vec();
        for i in 0..pairs.len() {
            let (a, b) = pairs[i];
            if a == b {
                loops += 1;
                continue;
            }
            for x in &mut xs {
                for e in &mut x.e {
                    if *e == b {
                        *e = a;
                    }
                }
            }
            for pair in &mut pairs[i + 1..] {
                if pair.0 == b {
                    pair.0 = a;
                }
                if pair.1 == b {
                    pair.1 = a;
                }
            }
        }
        Pd::new(xs, loops)
    }

    /// The orientation-respecting smoothing.
    pub fn smooth_oriented(&self, x: usize) -> Pd {
        let [e0, e1, e2, e3] = self.xs[x].e;
        if self.xs[x].pos {
            self.remove_and_join(&[x], &[(e0, e1), (e3, e2)])
        } else {
            self.remove_and_join(&[x], &[(e0, e3), (e1, e2)])
        }
    }

    /// Unoriented smoothings: `a` joins slots 0-1 and 2-3, otherwise 0-3 and
    /// 1-2. The result is given a fresh consistent orientation.
    pub fn smooth_unoriented(&self, x: usize, a: bool) -> Pd {
        let [e0, e1, e2, e3] = self.xs[x].e;
        let mut out = if a {
            self.remove_and_join(&[x], &[(e0, e1), (e2, e3)])
        } else {
            self.remove_and_join(&[x], &[(e0, e3), (e1, e2)])
        };
        out.reorient();
        out
    }

    /// Chooses an orientation for every component (keeping the existing one
    /// where it is consistent) and rewrites crossings in the standard form.
    pub fn reorient(&mut self) {
        let n = self.n();
        let occ = self.occ();
        let mut incoming = vec![[None::<bool>; 4]; n];
        for x0 in 0..n {
            for p0 in 0..4 {
                if incoming[x0][p0].is_some() {
                    continue;
                }
                // Prefer the stored direction for the strand through (x0, p0).
                let (mut x, mut p) = if self.xs[x0].incoming(p0) { (x0, p0) } else { (x0, (p0 + 2) % 4) };
                while incoming[x][p].is_none() {
                    incoming[x][p] = Some(true);
                    incoming[x][(p + 2) % 4] = Some(false);
                    let (y, q) = Self::across(&occ, &self.xs, x, (p + 2) % 4);
                    x = y;
                    p = q;
                }
            }
        }
        for (x, xi) in self.xs.iter_mut().enumerate() {
            let inc = incoming[x];
            let [e0, e1, e2, e3] = xi.e;
            let (e, over_in) = if inc[0] == Some(true) {
                ([e0, e1, e2, e3], if inc[3] == Some(true) { 3 } else { 1 })
            } else {
                ([e2, e3, e0, e1], if inc[1] == Some(true) { 3 } else { 1 })
            };
            *xi = Xing { e, pos: over_in == 3 };
        }
    }

    /// A kink: an edge joining two neighbouring slots of one crossing.
    pub fn find_curl(&self) -> Option<(usize, usize)> {
        for (x, xi) in self.xs.iter().enumerate() {
            for i in 0..4 {
                if xi.e[i] == xi.e[(i + 1) % 4] {
                    return Some((x, i));
                }
            }
        }
        None
    }

    /// Removes the kink found by [`Pd::find_curl`]; returns its sign.
    pub fn remove_curl(&self, x: usize, i: usize) -> (Pd, i32) {
        let e = self.xs[x].e;
        let out = self.remove_and_join(&[x], &[(e[(i + 2) % 4], e[(i + 3) % 4])]);
        (out, self.sign(x))
    }

    /// Faces as cycles of darts `(crossing, slot)`, each dart leaving along its edge.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let occ = self.occ();
        let n = self.n();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for x0 in 0..n {
            for p0 in 0..4 {
                if seen[x0][p0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut x, mut p) = (x0, p0);
                while !seen[x][p] {
                    seen[x][p] = true;
                    face.push((x, p));
                    let (y, q) = Self::across(&occ, &self.xs, x, p);
                    x = y;
                    p = (q + 3) % 4;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// `(faces, faces expected for a planar diagram)`.
    pub fn euler_faces(&self) -> (usize, usize) {
        let faces = self.faces().len();
        let expected = self.piece_labels().1.iter().map(|&size| size + 2).sum();
        (faces, expected)
    }

    pub fn bigons(&self) -> Vec<Bigon> {
        let occ = self.occ();
        let mut out = Vec::new();
        for face in self.faces() {
            if let [(x1, qa), (x2, qb)] = face[..] {
                if x1 == x2 {
                    continue;
                }
                let (_, pa) = Self::across(&occ, &self.xs, x1, qa);
                let (_, pb) = Self::across(&occ, &self.xs, x2, qb);
                out.push(Bigon { x1, qa, x2, pa, qb, pb });
            }
        }
        out
    }

    pub fn remove_rii(&self, b: &Bigon) -> Pd {
        let (e1, e2) = (self.xs[b.x1].e, self.xs[b.x2].e);
        self.remove_and_join(
            &[b.x1, b.x2],
            &[(e1[(b.qa + 2) % 4], e2[(b.pa + 2) % 4]), (e2[(b.qb + 2) % 4], e1[(b.pb + 2) % 4])],
        )
    }

    /// Connected pieces: for each crossing its piece, and the piece sizes.
    fn piece_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for [a, b] in self.occ() {
            let (ra, rb) = (find(&mut parent, a.0 as usize), find(&mut parent, b.0 as usize));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        for x in 0..n {
            let r = find(&mut parent, x);
            if label[r] == usize::MAX {
                label[r] = sizes.len();
                sizes.push(0);
            }
            label[x] = label[r];
            sizes[label[x]] += 1;
        }
        (label, sizes)
    }

    /// The connected pieces with crossings; free loops are not included.
    pub fn pieces(&self) -> Vec<Pd> {
        let (label, sizes) = self.piece_labels();
        if sizes.len() <= 1 {
            return if self.n() == 0 { Vec::new() } else { vec![Pd { xs: self.xs.clone(), loops: 0 }] };
        }
        let mut groups: Vec<Vec<Xing>> = vec![Vec::new(); sizes.len()];
        for (x, xi) in self.xs.iter().enumerate() {
            groups[label[x]].push(*xi);
        }
        groups.into_iter().map(|xs| Pd::new(xs, 0)).collect()
    }

    /// Components as traversal cycles: for every `(crossing, slot)` its component.
    pub fn components(&self) -> (Vec<[usize; 4]>, usize) {
        let n = self.n();
        let occ = self.occ();
        let mut comp = vec![[usize::MAX; 4]; n];
        let mut count = 0;
        for x0 in 0..n {
            for p0 in 0..4 {
                if comp[x0][p0] != usize::MAX {
                    continue;
                }
                let (mut x, mut p) = (x0, p0);
                while comp[x][p] == usize::MAX {
                    comp[x][p] = count;
                    comp[x][(p + 2) % 4] = count;
                    let (y, q) = Self::across(&occ, &self.xs, x, (p + 2) % 4);
                    x = y;
                    p = q;
                }
                count += 1;
            }
        }
        (comp, count)
    }

    /// Keeps the components flagged in `keep` (indices as in [`Pd::components`]).
    pub fn keep_components(&self, comp: &[[usize; 4]], keep: &[bool]) -> Pd {
        let mut remove = Vec::new();
        let mut pairs = Vec::new();
        for (x, xi) in self.xs.iter().enumerate() {
            let (u, o) = (keep[comp[x][0]], keep[comp[x][1]]);
            if u && o {
                continue;
            }
            remove.push(x);
            if u {
                pairs.push((xi.e[0], xi.e[2]));
            } else if o {
                pairs.push((xi.e[1], xi.e[3]));
            }
        }
        let mut out = self.remove_and_join(&remove, &pairs);
        out.loops -= self.loops;
        out
    }

    // ---- canonical codes ----

    /// Code of a connected diagram, minimal over all starting points; with
    /// `oriented` false it is also minimal over traversal directions.
    pub fn canonical_code(&self, oriented: bool) -> Vec<u32> {
        let n = self.n();
        let occ = self.occ();
        let mut best: Option<Vec<u32>> = None;
        let mut buf = Vec::with_capacity(2 * n + 8);
        for x in 0..n {
            for p in 0..4 {
                if oriented && !self.xs[x].incoming(p) {
                    continue;
                }
                if let Some(code) = self.code_from(&occ, x, p, oriented, best.as_deref(), &mut buf) {
                    best = Some(code);
                }
            }
        }
        best.unwrap_or_default()
    }

    /// One traversal; returns the code if it beats `best`.
    fn code_from(
        &self,
        occ: &[[(u32, u8); 2]],
        x0: usize,
        p0: usize,
        oriented: bool,
        best: Option<&[u32]>,
        buf: &mut Vec<u32>,
    ) -> Option<Vec<u32>> {
        const SEP: u32 = u32::MAX;
        let n = self.n();
        let mut id = vec![u32::MAX; n];
        let mut first = vec![0usize; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut visited = vec![[false; 4]; n];
        buf.clear();
        let mut state = Ordering::Equal;
        let push = |buf: &mut Vec<u32>, t: u32, state: &mut Ordering| -> bool {
            if *state == Ordering::Equal {
                if let Some(b) = best {
                    match b.get(buf.len()).map(|&bt| t.cmp(&bt)).unwrap_or(Ordering::Greater) {
                        Ordering::Greater => return false,
                        Ordering::Less => *state = Ordering::Less,
                        Ordering::Equal => {}
                    }
                } else {
                    *state = Ordering::Less;
                }
            }
            buf.push(t);
            true
        };
        let (mut sx, mut sp) = (x0, p0);
        loop {
            let (mut x, mut p) = (sx, sp);
            loop {
                let token = if id[x] == u32::MAX {
                    id[x] = order.len() as u32;
                    first[x] = p;
                    order.push(x);
                    (p % 2) as u32
                } else {
                    2 + id[x] * 4 + ((p + 4 - first[x]) % 4) as u32
                };
                if !push(buf, token, &mut state) {
                    return None;
                }
                visited[x][p] = true;
                visited[x][(p + 2) % 4] = true;
                let (y, q) = Self::across(occ, &self.xs, x, (p + 2) % 4);
                x = y;
                p = q;
                if (x, p) == (sx, sp) {
                    break;
                }
            }
            if !push(buf, SEP, &mut state) {
                return None;
            }
            let next = order.iter().find_map(|&x| {
                let p = (0..4).find(|&p| !visited[x][p])?;
                Some((x, p))
            });
            match next {
                None => break,
                Some((x, p)) => {
                    let (a, b) = (p, (p + 2) % 4);
                    let p = if oriented {
                        if self.xs[x].incoming(a) {
                            a
                        } else {
                            b
                        }
                    } else if (a + 4 - first[x]) % 4 < (b + 4 - first[x]) % 4 {
                        a
                    } else {
                        b
                    };
                    sx = x;
                    sp = p;
                }
            }
        }
        match (state, best) {
            (Ordering::Equal, Some(b)) if b.len() <= buf.len() => None,
            _ => Some(buf.clone()),
        }
    }

    /// Code of an arbitrary diagram: free loops, then sorted piece codes.
    pub fn full_code(&self, oriented: bool) -> Vec<u32> {
        let mut pieces: Vec<Vec<u32>> = self.pieces().iter().map(|p| p.canonical_code(oriented)).collect();
        pieces.sort();
        let mut out = vec![self.loops, pieces.len() as u32];
        for p in pieces {
            out.push(p.len() as u32);
            out.extend(p);
        }
        out
    }
}
