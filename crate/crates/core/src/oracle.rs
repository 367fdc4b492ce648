//! Explicit construction of the pattern as a word of elementary twists on
//! four boundary positions, closed up inside the solid torus, and evaluated
//! by walking along the strands.
//!
//! Nothing here consults the permutation calculus or the transition table
//! in [`crate::pattern`]; the two are compared in tests, and
//! [`derive_transition_table`] rebuilds the frozen table from traversals.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};


use crate::error::{Error, Result};
use crate::pattern::{Flow, OrientationState, Parity, Pattern, TermTransition, TransitionTable};
use crate::scalar::Scalar;

/// Largest diagram the oracle will build.
pub const MAX_GENERATORS: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CuspDirection {
    Up,
    Down,
}

impl CuspDirection {
    fn opposite(self) -> Self {
        match self {
            CuspDirection::Up => CuspDirection::Down,
            CuspDirection::Down => CuspDirection::Up,
        }
    }
}

/// The free bits of the template: handedness of each twist type (sign of a
/// crossing whose two strands run the same way) and the cusp direction of a
/// lower twist whose strands both run inwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conventions {
    pub c_twist: i8,
    pub d_twist: i8,
    pub inward_pair_cusps: CuspDirection,
}

impl Conventions {
    /// Output of [`calibrate`], frozen.
    pub const CALIBRATED: Conventions = Conventions {
        c_twist: 1,
        d_twist: -1,
        inward_pair_cusps: CuspDirection::Up,
    };

    pub fn all() -> impl Iterator<Item = Conventions> {
        [1i8, -1].into_iter().flat_map(|c| {
            [1i8, -1].into_iter().flat_map(move |d| {
                [CuspDirection::Up, CuspDirection::Down]
                    .into_iter()
                    .map(move |cusp| Conventions {
                        c_twist: c,
                        d_twist: d,
                        inward_pair_cusps: cusp,
                    })
            })
        })
    }

    fn handedness(&self, kind: TwistKind) -> i64 {
        i64::from(match kind {
            TwistKind::C => self.c_twist,
            TwistKind::D => self.d_twist,
        })
    }
}

/// `C` twists the left pair {1, 2}; `D` twists the lower pair {2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwistKind {
    C,
    D,
}

impl TwistKind {
    /// Zero-based slots of the two positions involved.
    fn slots(self) -> (usize, usize) {
        match self {
            TwistKind::C => (0, 1),
            TwistKind::D => (1, 2),
        }
    }

    fn apply(self, slot: usize) -> usize {
        let (p, q) = self.slots();
        if slot == p {
            q
        } else if slot == q {
            p
        } else {
            slot
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    /// Zero-based term index, outermost first.
    pub term: usize,
    pub kind: TwistKind,
}

/// The pattern as a sequence of elementary twists, read from the outer
/// boundary inwards. Term `i` contributes `dᵢ` lower twists then `cᵢ` left
/// twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleWord {
    generators: Vec<Generator>,
    counts: Vec<(usize, usize)>,
    term_starts: Vec<usize>,
}

impl TangleWord {
    pub fn from_pattern<T: Scalar>(p: &Pattern<T>) -> Result<Self> {
        let mut counts = Vec::with_capacity(p.len());
        let mut total = 0usize;
        for t in p.terms() {
            let c = t.c().to_usize().ok_or_else(|| Error::Overflow(t.c().to_string()))?;
            let d = t.d().to_usize().ok_or_else(|| Error::Overflow(t.d().to_string()))?;
            total = total.saturating_add(c).saturating_add(d);
            if total > MAX_GENERATORS {
                return Err(Error::BoundExceeded {
                    det: format!("{total} crossings"),
                    bound: MAX_GENERATORS.to_string(),
                });
            }
            counts.push((c, d));
        }
        let mut generators = Vec::with_capacity(total);
        let mut term_starts = Vec::with_capacity(counts.len() + 1);
        for (term, &(c, d)) in counts.iter().enumerate() {
            term_starts.push(generators.len());
            generators.extend(std::iter::repeat_n(Generator { term, kind: TwistKind::D }, d));
            generators.extend(std::iter::repeat_n(Generator { term, kind: TwistKind::C }, c));
        }
        term_starts.push(generators.len());
        Ok(TangleWord {
            generators,
            counts,
            term_starts,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.counts.len()
    }

    /// `(c, d)` per term.
    pub fn counts(&self) -> &[(usize, usize)] {
        &self.counts
    }

    /// Net permutation of one term's strands, as images of slots 0..3.
    pub fn term_images(&self, term: usize) -> [usize; 3] {
        let range = self.term_starts[term]..self.term_starts[term + 1];
        let mut img = [0, 1, 2];
        for g in &self.generators[range] {
            for x in img.iter_mut() {
                *x = g.kind.apply(*x);
            }
        }
        img
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(c, d)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "term {}: D^{} C^{}", i + 1, d, c)?;
        }
        Ok(())
    }
}

/// Flow at each of the four boundary slots of one level.
type SlotFlows = [Option<Flow>; 4];

/// The tangle word closed up: on the outside the two upper points (1, 4)
/// and the two lower points (2, 3) are joined around the solid torus; on
/// the inside the same pairs are joined by two horizontal arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedDiagram {
    word: TangleWord,
    conventions: Conventions,
}

/// Per-term tallies from a traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermTrace {
    pub c: usize,
    pub d: usize,
    pub outer: OrientationState,
    pub inner: OrientationState,
    pub c_sum: i64,
    pub d_sum: i64,
    pub up_cusps: u64,
    pub down_cusps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Traversal {
    pub components: u8,
    /// Net passes across the torus identification, rightward positive.
    pub signed_winding: i64,
    pub winding_number: u8,
    pub writhe: i64,
    pub up_cusps: u64,
    pub down_cusps: u64,
    pub terms: Vec<TermTrace>,
}

impl Traversal {
    pub fn tb(&self) -> i64 {
        self.writhe - ((self.up_cusps + self.down_cusps) / 2) as i64
    }

    pub fn rot(&self) -> i64 {
        (self.down_cusps as i64 - self.up_cusps as i64) / 2
    }
}

// Slot 3 (position 4) pairs with slot 0 (position 1); slot 1 with slot 2.
fn closure_partner(slot: usize) -> usize {
    match slot {
        0 => 3,
        3 => 0,
        1 => 2,
        2 => 1,
        _ => unreachable!(),
    }
}

// Leaving the outer boundary at the right side (positions 3, 4) wraps
// rightwards; leaving at the left side wraps leftwards.
fn wrap_direction(slot: usize) -> i64 {
    match slot {
        2 | 3 => 1,
        _ => -1,
    }
}

impl ClosedDiagram {
    pub fn word(&self) -> &TangleWord {
        &self.word
    }

    pub fn conventions(&self) -> Conventions {
        self.conventions
    }

    pub fn crossing_count(&self) -> usize {
        self.word.len()
    }

    /// Orientation flows at every boundary slot and the net wrap count.
    fn orient(&self) -> Result<(Vec<SlotFlows>, u8, i64)> {
        let gens = &self.word.generators;
        let depth = gens.len();
        let mut flows: Vec<SlotFlows> = vec![[None; 4]; depth + 1];
        let mut components = 0u8;
        let mut winding = 0i64;
        // The first component leaves at position 4. A second one, if any, is
        // oriented to leave at position 3 so that both wrap the same way.
        for start_slot in [3usize, 2, 1, 0] {
            if flows[0][start_slot].is_some() {
                continue;
            }
            components += 1;
            let start = (0usize, start_slot, Flow::Out);
            let mut cur = start;
            let mut guard = 0usize;
            loop {
                let (t, x, dir) = cur;
                if flows[t][x].is_some() {
                    return Err(Error::Traversal(format!("boundary {t} slot {x} visited twice")));
                }
                flows[t][x] = Some(dir);
                cur = match dir {
                    Flow::In if t == depth => (t, closure_partner(x), Flow::Out),
                    Flow::In => (t + 1, gens[t].kind.apply(x), Flow::In),
                    Flow::Out if t == 0 => {
                        winding += wrap_direction(x);
                        (0, closure_partner(x), Flow::In)
                    }
                    Flow::Out => (t - 1, gens[t - 1].kind.apply(x), Flow::Out),
                };
                if cur == start {
                    break;
                }
                guard += 1;
                if guard > 4 * (depth + 1) {
                    return Err(Error::Traversal("strand does not close up".into()));
                }
            }
        }
        if flows.iter().any(|row| row.iter().any(Option::is_none)) {
            return Err(Error::Traversal("unused strand endpoint".into()));
        }
        Ok((flows, components, winding))
    }

    pub fn traverse(&self) -> Result<Traversal> {
        let (flows, components, signed_winding) = self.orient()?;
        let flow = |t: usize, x: usize| flows[t][x].expect("all slots oriented");
        let state_at = |t: usize| {
            let f = [flow(t, 0), flow(t, 1), flow(t, 2), flow(t, 3)];
            OrientationState::new(f)
        };
        let conv = self.conventions;
        let mut terms = Vec::with_capacity(self.word.term_count());
        for (i, &(c, d)) in self.word.counts.iter().enumerate() {
            let (lo, hi) = (self.word.term_starts[i], self.word.term_starts[i + 1]);
            let mut trace = TermTrace {
                c,
                d,
                outer: state_at(lo)?,
                inner: state_at(hi)?,
                c_sum: 0,
                d_sum: 0,
                up_cusps: 0,
                down_cusps: 0,
            };
            for t in lo..hi {
                let g = self.word.generators[t];
                let (p, q) = g.kind.slots();
                let (fp, fq) = (flow(t, p), flow(t, q));
                let parallel = if fp == fq { 1 } else { -1 };
                let sign = conv.handedness(g.kind) * parallel;
                match g.kind {
                    TwistKind::C => trace.c_sum += sign,
                    TwistKind::D => {
                        trace.d_sum += sign;
                        let (up, down) = match (fp, fq) {
                            (Flow::In, Flow::In) => cusp_pair(conv.inward_pair_cusps),
                            (Flow::Out, Flow::Out) => cusp_pair(conv.inward_pair_cusps.opposite()),
                            _ => (1, 1),
                        };
                        trace.up_cusps += up;
                        trace.down_cusps += down;
                    }
                }
            }
            terms.push(trace);
        }
        Ok(Traversal {
            components,
            signed_winding,
            winding_number: signed_winding.unsigned_abs() as u8,
            writhe: terms.iter().map(|t| t.c_sum + t.d_sum).sum(),
            up_cusps: terms.iter().map(|t| t.up_cusps).sum(),
            down_cusps: terms.iter().map(|t| t.down_cusps).sum(),
            terms,
        })
    }

    /// Plain-text dump of the word and the traversal.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "word: {}", self.word);
        let _ = writeln!(out, "crossings: {}", self.crossing_count());
        match self.traverse() {
            Ok(tr) => {
                let _ = writeln!(
                    out,
                    "components: {}  winding: {} (signed {})  writhe: {}  cusps up/down: {}/{}",
                    tr.components, tr.winding_number, tr.signed_winding, tr.writhe, tr.up_cusps, tr.down_cusps
                );
                for (i, t) in tr.terms.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "term {}: c={} d={} outer {} -> inner {}  sum {:+}{:+}  up {} down {}",
                        i + 1,
                        t.c,
                        t.d,
                        t.outer,
                        t.inner,
                        t.c_sum,
                        t.d_sum,
                        t.up_cusps,
                        t.down_cusps
                    );
                }
            }
            Err(e) => {
                let _ = writeln!(out, "traversal failed: {e}");
            }
        }
        out
    }
}

fn cusp_pair(dir: CuspDirection) -> (u64, u64) {
    match dir {
        CuspDirection::Up => (2, 0),
        CuspDirection::Down => (0, 2),
    }
}

pub fn build<T: Scalar>(p: &Pattern<T>) -> Result<ClosedDiagram> {
    build_with(p, Conventions::CALIBRATED)
}

pub fn build_with<T: Scalar>(p: &Pattern<T>, conventions: Conventions) -> Result<ClosedDiagram> {
    Ok(ClosedDiagram {
        word: TangleWord::from_pattern(p)?,
        conventions,
    })
}

pub fn traverse(d: &ClosedDiagram) -> Result<Traversal> {
    d.traverse()
}

/// Every pattern with `1..=max_terms` terms and entries in `1..=max_entry`.
pub fn enumerate_patterns(max_terms: usize, max_entry: i64) -> impl Iterator<Item = Pattern<i64>> {
    (1..=max_terms).flat_map(move |m| {
        let per_term = (max_entry * max_entry) as usize;
        let count = per_term.pow(m as u32);
        (0..count).map(move |mut code| {
            let mut pairs = Vec::with_capacity(m);
            for _ in 0..m {
                let k = (code % per_term) as i64;
                code /= per_term;
                pairs.push((k / max_entry + 1, k % max_entry + 1));
            }
            Pattern::from_pairs(&pairs).expect("entries are positive")
        })
    })
}

#[derive(Default)]
struct CellSamples {
    c_values: Vec<usize>,
    d_values: Vec<usize>,
    c_sign: Option<i64>,
    d_sign: Option<i64>,
    next: Option<OrientationState>,
    cusps: Option<(u64, u64)>,
}

/// Rebuilds the state-machine table from oracle traversals of every
/// pattern with up to three terms and entries up to 4. Each cell must show
/// a fixed sign on `c` and on `d` across at least two magnitudes of each,
/// a fixed next state and a fixed cusp split per lower crossing.
pub fn derive_transition_table(conventions: Conventions) -> Result<TransitionTable> {
    let mut cells: BTreeMap<(u8, usize, usize), CellSamples> = BTreeMap::new();
    let fail = |msg: String| Err(Error::TableDerivation(msg));
    for p in enumerate_patterns(3, 4) {
        let tr = build_with(&p, conventions)?.traverse()?;
        for t in &tr.terms {
            let key = (
                t.outer.outgoing_position(),
                t.c % 2,
                t.d % 2,
            );
            let cell = cells.entry(key).or_default();
            let (c, d) = (t.c as i64, t.d as i64);
            if t.c_sum.abs() != c || t.d_sum.abs() != d {
                return fail(format!("term sum {}{} not of the form ±c±d for c={c}, d={d}", t.c_sum, t.d_sum));
            }
            let cs = t.c_sum.signum();
            let ds = t.d_sum.signum();
            if *cell.c_sign.get_or_insert(cs) != cs || *cell.d_sign.get_or_insert(ds) != ds {
                return fail(format!("sign of a twist region varies inside cell {key:?}"));
            }
            if *cell.next.get_or_insert(t.inner) != t.inner {
                return fail(format!("next state varies inside cell {key:?}"));
            }
            if t.up_cusps % t.d as u64 != 0 || t.down_cusps % t.d as u64 != 0 {
                return fail(format!("cusps are not multiples of d in cell {key:?}"));
            }
            let split = (t.up_cusps / t.d as u64, t.down_cusps / t.d as u64);
            if *cell.cusps.get_or_insert(split) != split {
                return fail(format!("cusp split varies inside cell {key:?}"));
            }
            if !cell.c_values.contains(&t.c) {
                cell.c_values.push(t.c);
            }
            if !cell.d_values.contains(&t.d) {
                cell.d_values.push(t.d);
            }
        }
    }

    let mut table = [[[*TransitionTable::FROZEN.get(OrientationState::START, Parity::Even, Parity::Even); 2]; 2]; 3];
    for state in OrientationState::ALL {
        for (ci, cp) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
            for (di, dp) in [Parity::Even, Parity::Odd].into_iter().enumerate() {
                let key = (state.outgoing_position(), ci, di);
                let Some(cell) = cells.get(&key) else {
                    return fail(format!("no sample reaches state {state} with c {cp:?}, d {dp:?}"));
                };
                if cell.c_values.len() < 2 || cell.d_values.len() < 2 {
                    return fail(format!("cell {key:?} seen with fewer than two magnitudes"));
                }
                let (up, down) = cell.cusps.expect("sampled");
                table[usize::from(state.outgoing_position() - 1)][ci][di] = TermTransition {
                    next: cell.next.expect("sampled"),
                    c_sign: cell.c_sign.expect("sampled") as i8,
                    d_sign: cell.d_sign.expect("sampled") as i8,
                    up_per_crossing: up as u8,
                    down_per_crossing: down as u8,
                };
            }
        }
    }
    Ok(TransitionTable::from_cells(table))
}

/// Picks the unique conventions reproducing the two worked examples:
/// `[(7,1),(2,1)]` has term sums `c+d` then `-c+d` (writhe 7), and
/// `[(1,2),(1,3)]` has term sums `-c+d` then `-c-d` (writhe −3) with
/// rotation −3.
pub fn calibrate() -> Result<Conventions> {
    let first = Pattern::<i64>::from_pairs(&[(7, 1), (2, 1)])?;
    let second = Pattern::<i64>::from_pairs(&[(1, 2), (1, 3)])?;
    let mut hits = Vec::new();
    for conv in Conventions::all() {
        let a = build_with(&first, conv)?.traverse()?;
        let b = build_with(&second, conv)?.traverse()?;
        let sums = |t: &Traversal| t.terms.iter().map(|x| (x.c_sum, x.d_sum)).collect::<Vec<_>>();
        if sums(&a) == [(7, 1), (-2, 1)]
            && a.writhe == 7
            && sums(&b) == [(-1, 2), (-1, -3)]
            && b.writhe == -3
            && b.rot() == -3
        {
            hits.push(conv);
        }
    }
    match hits.as_slice() {
        [only] => Ok(*only),
        [] => Err(Error::TableDerivation("no convention reproduces the worked examples".into())),
        _ => Err(Error::TableDerivation(format!("{} conventions fit the worked examples", hits.len()))),
    }
}
