//! Oriented link diagrams as crossing lists, with braid-word input.
//!
//! An arc runs from one crossing slot to the next. Every arc appears exactly
//! once as an incoming slot and once as an outgoing slot, except free arcs,
//! which are crossingless unknotted loops. Components are numbered by their
//! smallest arc identifier.
//!
//! Diagrams built from a braid word keep the word. For those, crossing `i` is
//! letter `i` and arc `j < strands` is the strand at position `j` at the bottom
//! of the braid, so component order follows the smallest braid position of
//! each permutation cycle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type ArcId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// A word in the braid group on `strands` strands. Letter `+i` is the positive
/// crossing of positions `i` and `i + 1` (the left strand passes over), `-i`
/// its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for &g in &letters {
            if g == 0 {
                return Err(Error::InvalidBraid("zero is not a braid generator".into()));
            }
            if g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!(
                    "generator {} needs more than {} strands",
                    g, strands
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `perm[s]` is the top position of the strand that starts at bottom position `s`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let a = g.unsigned_abs() as usize - 1;
            at.swap(a, a + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Cycles of the permutation, each starting at its smallest position,
    /// ordered by that position.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = perm[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(times),
        }
    }

    pub fn with_letter_negated(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let mut letters = self.letters.clone();
        letters[index] = -letters[index];
        Ok(Self { strands: self.strands, letters })
    }

    pub fn without_letter(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let mut letters = self.letters.clone();
        letters.remove(index);
        Ok(Self { strands: self.strands, letters })
    }

    /// Appends another word on the same number of strands.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if other.strands != self.strands {
            return Err(Error::InvalidBraid(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// The braid formed by the strands that start at the kept positions.
    /// The kept set must be a union of permutation cycles.
    pub fn sublink(&self, keep: &[bool]) -> Result<Self> {
        if keep.len() != self.strands {
            return Err(Error::InvalidBraid("keep mask has the wrong length".into()));
        }
        let kept = keep.iter().filter(|&&k| k).count();
        if kept == 0 {
            return Err(Error::InvalidBraid("empty sublink".into()));
        }
        let mut at: Vec<bool> = keep.to_vec();
        let mut letters = Vec::new();
        for &g in &self.letters {
            let a = g.unsigned_abs() as usize - 1;
            if at[a] && at[a + 1] {
                let rank = at[..a].iter().filter(|&&k| k).count() as i32 + 1;
                letters.push(rank * g.signum());
            }
            at.swap(a, a + 1);
        }
        if at != keep {
            return Err(Error::InvalidBraid("kept positions are not a union of cycles".into()));
        }
        Self::new(kept, letters)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.letters.len() {
            return Err(Error::CrossingOutOfRange {
                index,
                count: self.letters.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {}", g)?;
        }
        Ok(())
    }
}

/// Reads a braid word such as `"3: 1 -2 1"` or `"1, -2, 1"`. Without a strand
/// count, the word uses `1 + max |letter|` strands.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (count, body) = match text.split_once(':') {
        Some((head, rest)) => {
            let head = head.trim();
            let n: usize = head.parse().map_err(|_| Error::Parse {
                token: head.to_string(),
                reason: "strand count must be a positive integer".into(),
            })?;
            if n == 0 {
                return Err(Error::Parse {
                    token: head.to_string(),
                    reason: "strand count must be a positive integer".into(),
                });
            }
            (Some(n), rest)
        }
        None => (None, text),
    };
    let mut letters = Vec::new();
    for token in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let g: i32 = token.parse().map_err(|_| Error::Parse {
            token: token.to_string(),
            reason: "not an integer".into(),
        })?;
        if g == 0 {
            return Err(Error::Parse {
                token: token.to_string(),
                reason: "zero is not a braid generator".into(),
            });
        }
        if let Some(n) = count {
            if g.unsigned_abs() as usize >= n {
                return Err(Error::Parse {
                    token: token.to_string(),
                    reason: format!("generator needs more than {} strands", n),
                });
            }
        }
        letters.push(g);
    }
    let strands = match count {
        Some(n) => n,
        None => {
            if letters.is_empty() {
                return Err(Error::Parse {
                    token: text.trim().to_string(),
                    reason: "empty word with no strand count".into(),
                });
            }
            1 + letters.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(0)
        }
    };
    BraidWord::new(strands, letters)
}

/// One crossing: the under strand runs `under_in -> under_out`, the over strand
/// `over_in -> over_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub over_in: ArcId,
    pub over_out: ArcId,
}

impl Crossing {
    /// PD-style slots: counterclockwise from the incoming under arc.
    pub fn pd_arcs(&self) -> [ArcId; 4] {
        match self.sign {
            Sign::Positive => [self.under_in, self.over_out, self.under_out, self.over_in],
            Sign::Negative => [self.under_in, self.over_in, self.under_out, self.over_out],
        }
    }

    /// Inverse of [`Crossing::pd_arcs`].
    pub fn from_pd(sign: Sign, arcs: [ArcId; 4]) -> Self {
        let [a, b, c, d] = arcs;
        match sign {
            Sign::Positive => Crossing { sign, under_in: a, over_out: b, under_out: c, over_in: d },
            Sign::Negative => Crossing { sign, under_in: a, over_in: b, under_out: c, over_out: d },
        }
    }

    fn switched(&self) -> Self {
        Crossing {
            sign: self.sign.flip(),
            under_in: self.over_in,
            under_out: self.over_out,
            over_in: self.under_in,
            over_out: self.under_out,
        }
    }
}

/// Self/mixed status of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingSite {
    pub crossing: usize,
    /// `(under component, over component)`.
    pub strands: (usize, usize),
    pub self_crossing: bool,
}

impl CrossingSite {
    /// The involved components as an ordered pair.
    pub fn components(&self) -> (usize, usize) {
        let (a, b) = self.strands;
        (a.min(b), a.max(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    arc_count: u32,
    component_of: Vec<usize>,
    component_count: usize,
    braid: Option<BraidWord>,
}

impl LinkDiagram {
    /// Validates a crossing list over arcs `0..arc_count`. Arcs that appear in
    /// no crossing are free unknotted loops.
    pub fn from_crossings(crossings: Vec<Crossing>, arc_count: u32) -> Result<Self> {
        Self::build(crossings, arc_count, None)
    }

    /// Builds a diagram from PD-style crossings with arbitrary arc labels, plus
    /// `free_loops` crossingless unknots.
    pub fn from_pd(entries: &[(Sign, [u64; 4])], free_loops: usize) -> Result<Self> {
        let mut labels: Vec<u64> = entries.iter().flat_map(|(_, a)| a.iter().copied()).collect();
        labels.sort_unstable();
        labels.dedup();
        let index: BTreeMap<u64, ArcId> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as ArcId)).collect();
        let crossings = entries
            .iter()
            .map(|(sign, arcs)| Crossing::from_pd(*sign, arcs.map(|a| index[&a])))
            .collect();
        Self::build(crossings, (labels.len() + free_loops) as u32, None)
    }

    fn build(crossings: Vec<Crossing>, arc_count: u32, braid: Option<BraidWord>) -> Result<Self> {
        let n = arc_count as usize;
        let mut heads = vec![0u8; n];
        let mut tails = vec![0u8; n];
        for (i, c) in crossings.iter().enumerate() {
            for a in [c.under_in, c.over_in, c.under_out, c.over_out] {
                if a >= arc_count {
                    return Err(Error::InvalidDiagram(format!(
                        "crossing {} uses arc {} outside 0..{}",
                        i, a, arc_count
                    )));
                }
            }
            heads[c.under_in as usize] += 1;
            heads[c.over_in as usize] += 1;
            tails[c.under_out as usize] += 1;
            tails[c.over_out as usize] += 1;
        }
        for a in 0..n {
            if heads[a] > 1 || tails[a] > 1 || heads[a] != tails[a] {
                return Err(Error::InvalidDiagram(format!(
                    "arc {} must enter one crossing and leave one crossing",
                    a
                )));
            }
        }
        let next = successor_table(&crossings, arc_count);
        let mut component_of = vec![usize::MAX; n];
        let mut component_count = 0;
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let mut a = start;
            while component_of[a] == usize::MAX {
                component_of[a] = component_count;
                a = next[a] as usize;
            }
            component_count += 1;
        }
        Ok(Self { crossings, arc_count, component_of, component_count, braid })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> u32 {
        self.arc_count
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of(&self, arc: ArcId) -> usize {
        self.component_of[arc as usize]
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        self.braid.as_ref()
    }

    /// The same diagram with its braid provenance dropped.
    pub fn without_braid(&self) -> Self {
        Self { braid: None, ..self.clone() }
    }

    /// `next[a]` is the arc following `a` along its component.
    pub fn successors(&self) -> Vec<ArcId> {
        successor_table(&self.crossings, self.arc_count)
    }

    fn check_crossing(&self, c: usize) -> Result<()> {
        if c >= self.crossings.len() {
            return Err(Error::CrossingOutOfRange { index: c, count: self.crossings.len() });
        }
        Ok(())
    }

    /// Exchanges over and under strands at crossing `c`.
    pub fn switch_crossing(&self, c: usize) -> Result<Self> {
        self.check_crossing(c)?;
        let mut out = self.clone();
        out.crossings[c] = self.crossings[c].switched();
        if let Some(w) = &self.braid {
            out.braid = Some(w.with_letter_negated(c)?);
        }
        Ok(out)
    }

    /// Oriented smoothing at crossing `c`: the crossing is deleted and the
    /// incoming arcs are rewired to the outgoing arcs of the other strand.
    pub fn smooth_crossing(&self, c: usize) -> Result<Self> {
        if self.crossings.is_empty() {
            return Err(Error::InvalidDiagram("no crossing to smooth".into()));
        }
        self.check_crossing(c)?;
        if let Some(w) = &self.braid {
            return Ok(braid_closure(&w.without_letter(c)?));
        }
        let x = self.crossings[c];
        let mut merge = UnionFind::new(self.arc_count as usize);
        merge.union(x.under_in, x.over_out);
        merge.union(x.over_in, x.under_out);
        let kept: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c)
            .map(|(_, k)| *k)
            .collect();
        Self::relabel(kept, &mut merge, self.arc_count)
    }

    /// Relabels arcs by union-find classes, numbering classes by their smallest member.
    fn relabel(crossings: Vec<Crossing>, merge: &mut UnionFind, arc_count: u32) -> Result<Self> {
        Self::relabel_kept(crossings, merge, arc_count, |_| true)
    }

    fn relabel_kept(
        crossings: Vec<Crossing>,
        merge: &mut UnionFind,
        arc_count: u32,
        alive: impl Fn(ArcId) -> bool,
    ) -> Result<Self> {
        let mut rename = vec![u32::MAX; arc_count as usize];
        let mut next = 0u32;
        for a in (0..arc_count).filter(|&a| alive(a)) {
            let root = merge.find(a) as usize;
            if rename[root] == u32::MAX {
                rename[root] = next;
                next += 1;
            }
        }
        let mut map = |a: ArcId| rename[merge.find(a) as usize];
        let crossings = crossings
            .into_iter()
            .map(|k| Crossing {
                sign: k.sign,
                under_in: map(k.under_in),
                under_out: map(k.under_out),
                over_in: map(k.over_in),
                over_out: map(k.over_out),
            })
            .collect();
        Self::build(crossings, next, None)
    }

    pub fn classify_crossing(&self, c: usize) -> Result<CrossingSite> {
        self.check_crossing(c)?;
        let x = &self.crossings[c];
        let under = self.component_of(x.under_in);
        let over = self.component_of(x.over_in);
        Ok(CrossingSite { crossing: c, strands: (under, over), self_crossing: under == over })
    }

    /// Off-diagonal linking numbers; the diagonal is left zero.
    pub fn linking_numbers(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.component_count;
        let mut twice = vec![vec![0i64; n]; n];
        for x in &self.crossings {
            let a = self.component_of(x.under_in);
            let b = self.component_of(x.over_in);
            if a != b {
                twice[a][b] += x.sign.value();
                twice[b][a] += x.sign.value();
            }
        }
        for (i, row) in twice.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                if *v % 2 != 0 {
                    return Err(Error::InvalidDiagram(format!(
                        "odd signed crossing count between components {} and {}",
                        i, j
                    )));
                }
                *v /= 2;
            }
        }
        Ok(twice)
    }

    /// The sublink formed by the listed components, in increasing component order.
    pub fn sublink(&self, components: &[usize]) -> Result<Self> {
        let mut keep = vec![false; self.component_count];
        for &c in components {
            if c >= self.component_count {
                return Err(Error::ComponentOutOfRange { index: c, count: self.component_count });
            }
            keep[c] = true;
        }
        if !keep.iter().any(|&k| k) {
            return Err(Error::InvalidSubset(components.to_vec()));
        }
        if let Some(w) = &self.braid {
            let mask: Vec<bool> =
                (0..w.strands()).map(|pos| keep[self.component_of(pos as ArcId)]).collect();
            return Ok(braid_closure(&w.sublink(&mask)?));
        }
        let mut merge = UnionFind::new(self.arc_count as usize);
        let mut kept = Vec::new();
        for x in &self.crossings {
            let under = keep[self.component_of(x.under_in)];
            let over = keep[self.component_of(x.over_in)];
            match (under, over) {
                (true, true) => kept.push(*x),
                (true, false) => merge.union(x.under_in, x.under_out),
                (false, true) => merge.union(x.over_in, x.over_out),
                (false, false) => {}
            }
        }
        Self::relabel_kept(kept, &mut merge, self.arc_count, |a| keep[self.component_of(a)])
    }

    /// Connected pieces of the diagram, counting each free loop as a piece.
    pub fn piece_count(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count as usize);
        for x in &self.crossings {
            uf.union(x.under_in, x.over_in);
            uf.union(x.under_in, x.under_out);
            uf.union(x.under_in, x.over_out);
        }
        (0..self.arc_count).filter(|&a| uf.find(a) == a).count()
    }

    /// Removes Reidemeister I curls until none remain. Drops braid provenance
    /// when something is removed.
    pub fn without_kinks(&self) -> Result<Self> {
        let mut d = self.clone();
        loop {
            let kink = d
                .crossings
                .iter()
                .position(|x| x.under_out == x.over_in || x.over_out == x.under_in);
            let Some(c) = kink else { return Ok(d) };
            let x = d.crossings[c];
            let mut merge = UnionFind::new(d.arc_count as usize);
            merge.union(x.under_in, x.under_out);
            merge.union(x.over_in, x.over_out);
            let kept = d
                .crossings
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != c)
                .map(|(_, k)| *k)
                .collect();
            d = Self::relabel(kept, &mut merge, d.arc_count)?;
        }
    }

    /// Walks components in index order from their smallest arc and returns the
    /// first crossing met on its under strand before its over strand. `None`
    /// means the diagram is descending, hence an unlink.
    pub fn first_ascending_crossing(&self) -> Option<usize> {
        let next = self.successors();
        let mut head_of = vec![None; self.arc_count as usize];
        for (i, x) in self.crossings.iter().enumerate() {
            head_of[x.under_in as usize] = Some((i, false));
            head_of[x.over_in as usize] = Some((i, true));
        }
        let mut seen = vec![false; self.crossings.len()];
        let mut started = vec![false; self.component_count];
        for start in 0..self.arc_count {
            let comp = self.component_of(start);
            if started[comp] {
                continue;
            }
            started[comp] = true;
            let mut a = start;
            loop {
                if let Some((c, over)) = head_of[a as usize] {
                    if !seen[c] {
                        if !over {
                            return Some(c);
                        }
                        seen[c] = true;
                    }
                }
                a = next[a as usize];
                if a == start {
                    break;
                }
            }
        }
        None
    }

    /// A relabeling-normalized encoding of the diagram: arcs renumbered along a
    /// traversal of the components, crossings sorted.
    pub fn canonical_key(&self) -> Vec<u32> {
        let next = self.successors();
        let mut rename = vec![u32::MAX; self.arc_count as usize];
        let mut counter = 0u32;
        for start in 0..self.arc_count {
            if rename[start as usize] != u32::MAX {
                continue;
            }
            let mut a = start;
            loop {
                rename[a as usize] = counter;
                counter += 1;
                a = next[a as usize];
                if a == start {
                    break;
                }
            }
        }
        let mut rows: Vec<[u32; 5]> = self
            .crossings
            .iter()
            .map(|x| {
                [
                    (x.sign == Sign::Positive) as u32,
                    rename[x.under_in as usize],
                    rename[x.under_out as usize],
                    rename[x.over_in as usize],
                    rename[x.over_out as usize],
                ]
            })
            .collect();
        rows.sort_unstable();
        let mut key = Vec::with_capacity(rows.len() * 5 + 2);
        key.push(self.component_count as u32);
        key.push(self.arc_count);
        for r in rows {
            key.extend_from_slice(&r);
        }
        key
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.braid {
            Some(w) => write!(f, "closure({})", w),
            None => {
                let parts: Vec<String> = self
                    .crossings
                    .iter()
                    .map(|x| {
                        let [a, b, c, d] = x.pd_arcs();
                        format!("{}[{},{},{},{}]", if x.sign == Sign::Positive { "+" } else { "-" }, a, b, c, d)
                    })
                    .collect();
                write!(f, "diagram({} components; {})", self.component_count, parts.join(" "))
            }
        }
    }
}

fn successor_table(crossings: &[Crossing], arc_count: u32) -> Vec<ArcId> {
    let mut next: Vec<ArcId> = (0..arc_count).collect();
    for x in crossings {
        next[x.under_in as usize] = x.under_out;
        next[x.over_in as usize] = x.over_out;
    }
    next
}

/// Closure of a braid word. Crossing `i` is letter `i`; its sign is the
/// letter's sign.
pub fn braid_closure(word: &BraidWord) -> LinkDiagram {
    let k = word.strands();
    let mut current: Vec<ArcId> = (0..k as ArcId).collect();
    let mut next_id = k as ArcId;
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word.letters() {
        let a = g.unsigned_abs() as usize - 1;
        let b = a + 1;
        let (left_in, right_in) = (current[a], current[b]);
        let (left_out, right_out) = (next_id, next_id + 1);
        next_id += 2;
        let x = if g > 0 {
            Crossing {
                sign: Sign::Positive,
                over_in: left_in,
                over_out: left_out,
                under_in: right_in,
                under_out: right_out,
            }
        } else {
            Crossing {
                sign: Sign::Negative,
                over_in: right_in,
                over_out: right_out,
                under_in: left_in,
                under_out: left_out,
            }
        };
        crossings.push(x);
        current[b] = left_out;
        current[a] = right_out;
    }
    // close up: the top arc at each position is the bottom arc at that position
    let mut rename: Vec<ArcId> = (0..next_id).collect();
    for (pos, &top) in current.iter().enumerate() {
        rename[top as usize] = pos as ArcId;
    }
    let mut compact = vec![u32::MAX; next_id as usize];
    let mut count = 0u32;
    for a in 0..next_id {
        if rename[a as usize] == a {
            compact[a as usize] = count;
            count += 1;
        }
    }
    let map = |a: ArcId| compact[rename[a as usize] as usize];
    let crossings = crossings
        .into_iter()
        .map(|x| Crossing {
            sign: x.sign,
            under_in: map(x.under_in),
            under_out: map(x.under_out),
            over_in: map(x.over_in),
            over_out: map(x.over_out),
        })
        .collect();
    LinkDiagram::build(crossings, count, Some(word.clone()))
        .expect("braid closures are valid diagrams")
}

/// Union-find whose roots are the smallest members of their class.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect() }
    }

    pub(crate) fn find(&mut self, a: u32) -> u32 {
        let mut root = a;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = a;
        while self.parent[x as usize] != root {
            let up = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = up;
        }
        root
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else if rb < ra {
            self.parent[ra as usize] = rb;
        }
    }
}
