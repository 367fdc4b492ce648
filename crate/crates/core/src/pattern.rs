//! The solid-torus pattern assembled from the tail of an odd continued
//! fraction, with the fast permutation and orientation-state calculus used
//! to read off its winding number, writhe and cusps.
//!
//! Each term nests inside the previous one. Its four boundary points are
//! numbered 1 (upper left), 2 (lower left), 3 (lower right) and 4 (upper
//! right); the strand at 4 passes straight through every term and is
//! oriented outwards. Inside a term the strands first meet `d` twists of the
//! lower pair {2, 3} and then `c` twists of the left pair {1, 2}.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm::Perm3;
use crate::rational::ContinuedFraction;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of<T: Scalar>(x: &T) -> Parity {
        if x.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    const fn index(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// One nested piece: `c` upper crossings and `d` lower, cusped crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternTerm<T = BigInt> {
    c: T,
    d: T,
}

impl<T: Scalar> PatternTerm<T> {
    pub fn new(c: T, d: T) -> Result<Self> {
        if !c.is_positive() || !d.is_positive() {
            return Err(Error::InvalidTerm {
                c: c.to_string(),
                d: d.to_string(),
            });
        }
        Ok(PatternTerm { c, d })
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn parities(&self) -> (Parity, Parity) {
        (Parity::of(&self.c), Parity::of(&self.d))
    }

    pub fn permutation(&self) -> Perm3 {
        let (c, d) = self.parities();
        term_permutation(c, d)
    }
}

/// The pattern, outermost term first. It does not depend on `a₁`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern<T = BigInt> {
    terms: Vec<PatternTerm<T>>,
}

impl<T: Scalar> Pattern<T> {
    pub fn new(terms: Vec<PatternTerm<T>>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern { terms })
    }

    /// Convenience constructor from `(c, d)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let terms = pairs
            .iter()
            .map(|&(c, d)| PatternTerm::new(T::lit(c), T::lit(d)))
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(terms)
    }

    /// `dᵢ = a_{2i}` and `cᵢ = a_{2i+1}` for `i = 1..m`.
    pub fn from_cf(cf: &ContinuedFraction<T>) -> Result<Self> {
        match cf.half_length() {
            Some(m) if m >= 1 => {
                let t = cf.terms();
                let terms = (1..=m)
                    .map(|i| PatternTerm::new(t[2 * i].clone(), t[2 * i - 1].clone()))
                    .collect::<Result<Vec<_>>>()?;
                Pattern::new(terms)
            }
            _ => Err(Error::NoPattern(cf.to_string())),
        }
    }

    pub fn terms(&self) -> &[PatternTerm<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sum_c(&self) -> T {
        self.terms.iter().fold(T::zero(), |acc, t| acc + t.c.clone())
    }

    pub fn sum_d(&self) -> T {
        self.terms.iter().fold(T::zero(), |acc, t| acc + t.d.clone())
    }

    pub fn total_permutation(&self) -> Perm3 {
        total_permutation(self)
    }

    /// Walks the frozen transition table from the start state implied by the
    /// total permutation.
    pub fn invariants(&self) -> PatternInvariants<T> {
        self.invariants_with(&TransitionTable::FROZEN)
    }

    pub fn invariants_with(&self, table: &TransitionTable) -> PatternInvariants<T> {
        let start = start_state(self.total_permutation());
        let mut states = Vec::with_capacity(self.terms.len() + 1);
        let mut term_sums = Vec::with_capacity(self.terms.len());
        let mut state = start;
        let (mut writhe, mut up, mut down) = (T::zero(), T::zero(), T::zero());
        states.push(state);
        for term in &self.terms {
            let tr = table.transition(state, term);
            let s = tr.crossing_sum(term);
            writhe = writhe + s.clone();
            up = up + tr.up_cusps(term);
            down = down + tr.down_cusps(term);
            term_sums.push(s);
            state = tr.next;
            states.push(state);
        }
        PatternInvariants {
            start,
            states,
            term_sums,
            writhe,
            up_cusps: up,
            down_cusps: down,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Pattern<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "(c={}, d={})", t.c, t.d)?;
        }
        f.write_str("]")
    }
}

/// The element of S₃ contributed by one term, from the parities of its
/// crossing counts.
pub fn term_permutation(c: Parity, d: Parity) -> Perm3 {
    match (c, d) {
        (Parity::Odd, Parity::Odd) => Perm3::AB,
        (Parity::Even, Parity::Odd) => Perm3::A,
        (Parity::Odd, Parity::Even) => Perm3::B,
        (Parity::Even, Parity::Even) => Perm3::Id,
    }
}

/// `π₁π₂⋯π_m`, outermost term first.
pub fn total_permutation<T: Scalar>(p: &Pattern<T>) -> Perm3 {
    p.terms.iter().fold(Perm3::Id, |acc, t| acc * t.permutation())
}

/// 0 when the strand entering at outer position 1 reaches one of the two
/// lower inner positions together with the strand entering at 2, else 2.
pub fn winding_number(total: Perm3) -> u8 {
    match total {
        Perm3::AB | Perm3::ABA => 0,
        _ => 2,
    }
}

/// Two components when position 1 lands back in the upper left corner.
pub fn component_count(total: Perm3) -> u8 {
    match total {
        Perm3::A | Perm3::Id => 2,
        _ => 1,
    }
}

/// Direction of the strand crossing a boundary point, relative to the term
/// whose outer boundary it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flow {
    In,
    Out,
}

impl Flow {
    pub fn symbol(self) -> char {
        match self {
            Flow::In => '<',
            Flow::Out => '>',
        }
    }
}

/// Orientation of the four strands at a term's outer boundary. Position 4
/// always points out, and exactly one of positions 1–3 points out as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientationState {
    flows: [Flow; 4],
}

impl OrientationState {
    /// `1 in, 2 out, 3 in, 4 out`: the only orientation at the outermost
    /// boundary when the winding number vanishes.
    pub const START: OrientationState = OrientationState::outgoing_at(2);

    pub const ALL: [OrientationState; 3] = [
        OrientationState::outgoing_at(1),
        OrientationState::outgoing_at(2),
        OrientationState::outgoing_at(3),
    ];

    const fn outgoing_at(position: u8) -> OrientationState {
        let mut flows = [Flow::In, Flow::In, Flow::In, Flow::Out];
        flows[position as usize - 1] = Flow::Out;
        OrientationState { flows }
    }

    pub fn new(flows: [Flow; 4]) -> Result<Self> {
        let outs = flows.iter().filter(|f| **f == Flow::Out).count();
        let state = OrientationState { flows };
        if flows[3] != Flow::Out || outs != 2 {
            return Err(Error::UnreachableState(state.to_string()));
        }
        Ok(state)
    }

    pub fn flow(&self, position: u8) -> Flow {
        self.flows[usize::from(position - 1)]
    }

    pub fn flows(&self) -> [Flow; 4] {
        self.flows
    }

    /// The position among 1–3 whose strand points out.
    pub fn outgoing_position(&self) -> u8 {
        (1..=3).find(|&p| self.flow(p) == Flow::Out).expect("valid state")
    }

    /// State seen at the inner boundary after the strands are carried
    /// through `perm`.
    pub fn transported(&self, perm: Perm3) -> OrientationState {
        OrientationState::outgoing_at(perm.apply(self.outgoing_position()))
    }

    const fn index(&self) -> usize {
        let mut i = 0;
        while i < 3 {
            if matches!(self.flows[i], Flow::Out) {
                return i;
            }
            i += 1;
        }
        unreachable!()
    }
}

impl fmt::Display for OrientationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fl) in self.flows.iter().enumerate() {
            write!(f, "{}{}", i + 1, fl.symbol())?;
        }
        Ok(())
    }
}

/// The transition for one term out of a given state: the signs of its two
/// twist regions, the state at its inner boundary, and how its `2d` cusps
/// split into up and down cusps (as multiples of `d`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TermTransition {
    pub next: OrientationState,
    pub c_sign: i8,
    pub d_sign: i8,
    pub up_per_crossing: u8,
    pub down_per_crossing: u8,
}

impl TermTransition {
    pub fn crossing_sum<T: Scalar>(&self, term: &PatternTerm<T>) -> T {
        signed(self.c_sign, &term.c) + signed(self.d_sign, &term.d)
    }

    pub fn up_cusps<T: Scalar>(&self, term: &PatternTerm<T>) -> T {
        T::lit(i64::from(self.up_per_crossing)) * term.d.clone()
    }

    pub fn down_cusps<T: Scalar>(&self, term: &PatternTerm<T>) -> T {
        T::lit(i64::from(self.down_per_crossing)) * term.d.clone()
    }

    /// `±c ± d` in the same notation used for the table arrows.
    pub fn label(&self) -> String {
        let sign = |s: i8| if s > 0 { '+' } else { '-' };
        format!("{}c{}d", sign(self.c_sign), sign(self.d_sign))
    }
}

fn signed<T: Scalar>(sign: i8, x: &T) -> T {
    if sign >= 0 {
        x.clone()
    } else {
        -x.clone()
    }
}

/// All twelve transitions, indexed by state and the parities of `c` and `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionTable {
    cells: [[[TermTransition; 2]; 2]; 3],
}

const fn tt(next: u8, c_sign: i8, d_sign: i8, up: u8, down: u8) -> TermTransition {
    TermTransition {
        next: OrientationState::outgoing_at(next),
        c_sign,
        d_sign,
        up_per_crossing: up,
        down_per_crossing: down,
    }
}

impl TransitionTable {
    /// The table reconstructed from the diagram oracle and calibrated against
    /// the worked examples. `oracle::derive_transition_table` regenerates it.
    ///
    /// Layout: `cells[out - 1][c parity][d parity]`, even before odd.
    pub const FROZEN: TransitionTable = TransitionTable {
        cells: [
            // 1 out: both lower strands enter, every cusp points up.
            [
                [tt(1, -1, -1, 2, 0), tt(1, -1, -1, 2, 0)],
                [tt(2, -1, -1, 2, 0), tt(2, -1, -1, 2, 0)],
            ],
            // 2 out: the start state.
            [
                [tt(2, -1, 1, 1, 1), tt(3, 1, 1, 1, 1)],
                [tt(1, -1, 1, 1, 1), tt(3, 1, 1, 1, 1)],
            ],
            // 3 out.
            [
                [tt(3, 1, 1, 1, 1), tt(2, -1, 1, 1, 1)],
                [tt(3, 1, 1, 1, 1), tt(1, -1, 1, 1, 1)],
            ],
        ],
    };

    pub(crate) fn from_cells(cells: [[[TermTransition; 2]; 2]; 3]) -> Self {
        TransitionTable { cells }
    }

    pub fn get(&self, state: OrientationState, c: Parity, d: Parity) -> &TermTransition {
        &self.cells[state.index()][c.index()][d.index()]
    }

    pub fn transition<T: Scalar>(&self, state: OrientationState, term: &PatternTerm<T>) -> TermTransition {
        let (c, d) = term.parities();
        *self.get(state, c, d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (OrientationState, Parity, Parity, &TermTransition)> {
        OrientationState::ALL.into_iter().flat_map(move |s| {
            [Parity::Even, Parity::Odd].into_iter().flat_map(move |c| {
                [Parity::Even, Parity::Odd]
                    .into_iter()
                    .map(move |d| (s, c, d, self.get(s, c, d)))
            })
        })
    }
}

impl fmt::Display for TransitionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, c, d, tr) in self.iter() {
            writeln!(
                f,
                "{s} c:{:?} d:{:?} -> {} {} up={}d down={}d",
                c,
                d,
                tr.next,
                tr.label(),
                tr.up_per_crossing,
                tr.down_per_crossing
            )?;
        }
        Ok(())
    }
}

/// One step of the state machine with the frozen table.
pub fn step<T: Scalar>(state: OrientationState, term: &PatternTerm<T>) -> TermTransition {
    TransitionTable::FROZEN.transition(state, term)
}

/// Orientation at the outermost boundary. For winding number 0 this is
/// forced. For a knot with winding number 2 the strand entering at 1 comes
/// back out where the lower inner arc sends it. For a two-component link the
/// second component leaves at 3, so both components wrap the same way.
pub fn start_state(total: Perm3) -> OrientationState {
    if component_count(total) == 2 {
        OrientationState::outgoing_at(3)
    } else if winding_number(total) == 0 {
        OrientationState::START
    } else {
        // Entering at 1, the strand reaches inner position T(1), crosses the
        // lower inner arc and returns to the outer boundary at T⁻¹ of the partner.
        let partner = match total.apply(1) {
            2 => 3,
            3 => 2,
            p => p,
        };
        OrientationState::outgoing_at(total.preimage(partner))
    }
}

/// Writhe, cusps and the state path of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternInvariants<T = BigInt> {
    pub start: OrientationState,
    /// States at boundaries 0..=m; entry `i` is the outer boundary of term `i+1`.
    pub states: Vec<OrientationState>,
    pub term_sums: Vec<T>,
    pub writhe: T,
    pub up_cusps: T,
    pub down_cusps: T,
}

impl<T: Scalar> PatternInvariants<T> {
    pub fn cusps(&self) -> T {
        self.up_cusps.clone() + self.down_cusps.clone()
    }

    /// `wr - #cusps/2`.
    pub fn tb(&self) -> T {
        self.writhe.clone() - self.cusps() / T::two()
    }

    /// `(down - up)/2`.
    pub fn rot(&self) -> T {
        (self.down_cusps.clone() - self.up_cusps.clone()) / T::two()
    }
}

pub fn writhe<T: Scalar>(p: &Pattern<T>) -> T {
    p.invariants().writhe
}

/// `(up, down)`.
pub fn cusp_counts<T: Scalar>(p: &Pattern<T>) -> (T, T) {
    let inv = p.invariants();
    (inv.up_cusps, inv.down_cusps)
}

pub fn tb_pattern<T: Scalar>(p: &Pattern<T>) -> T {
    p.invariants().tb()
}

pub fn rot_pattern<T: Scalar>(p: &Pattern<T>) -> T {
    p.invariants().rot()
}
