//! The Fano plane: points, lines, the duality map, pencils, ordered pencils
//! and Pasch configurations.
//!
//! Lines are stored as bitmasks over the points (bit `p` set for point `p`),
//! so incidence and intersection are single bit operations.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the Fano plane, numbered `1..=7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(u8);

impl Point {
    pub fn new(value: u8) -> Result<Self> {
        if (1..=7).contains(&value) {
            Ok(Point(value))
        } else {
            Err(Error::InvalidPoint(value))
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub(crate) const fn bit(self) -> u8 {
        1 << self.0
    }

    pub fn all() -> impl Iterator<Item = Point> + Clone {
        (1..=7).map(Point)
    }

    fn from_bit_index(i: u32) -> Point {
        debug_assert!((1..=7).contains(&i));
        Point(i as u8)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.0)
    }
}

fn points_of_mask(mask: u8) -> impl Iterator<Item = Point> {
    (1..=7u32)
        .filter(move |i| mask & (1 << i) != 0)
        .map(Point::from_bit_index)
}

const fn mask3(a: u8, b: u8, c: u8) -> u8 {
    (1 << a) | (1 << b) | (1 << c)
}

/// The seven lines in sorted order; `phi` sends point `i` to entry `i - 1`.
const LINE_MASKS: [u8; 7] = [
    mask3(1, 2, 3),
    mask3(1, 4, 5),
    mask3(1, 6, 7),
    mask3(2, 4, 6),
    mask3(2, 5, 7),
    mask3(3, 4, 7),
    mask3(3, 5, 6),
];

/// A line of the Fano plane (an unordered 3-set of points). Lines compare
/// lexicographically on their sorted points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Line(u8);

impl Ord for Line {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.points().cmp(&other.points())
    }
}

impl PartialOrd for Line {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Line {
    pub fn all() -> [Line; 7] {
        LINE_MASKS.map(Line)
    }

    pub fn from_mask(mask: u8) -> Result<Self> {
        if LINE_MASKS.contains(&mask) {
            Ok(Line(mask))
        } else {
            let pts: String = points_of_mask(mask).map(|p| p.to_string()).collect();
            Err(Error::InvalidLine(pts))
        }
    }

    pub fn from_points(a: Point, b: Point, c: Point) -> Result<Self> {
        let mask = a.bit() | b.bit() | c.bit();
        if mask.count_ones() != 3 {
            return Err(Error::InvalidLine(format!("{a}{b}{c}")));
        }
        Line::from_mask(mask)
    }

    /// The unique line through two distinct points.
    pub fn through(p: Point, q: Point) -> Option<Line> {
        if p == q {
            return None;
        }
        let m = p.bit() | q.bit();
        LINE_MASKS.iter().find(|&&l| l & m == m).map(|&l| Line(l))
    }

    pub const fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, p: Point) -> bool {
        self.0 & p.bit() != 0
    }

    /// Points in increasing order.
    pub fn points(self) -> [Point; 3] {
        let mut it = points_of_mask(self.0);
        [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
    }

    /// The third point of the line, given two of its points.
    pub fn third(self, p: Point, q: Point) -> Option<Point> {
        let rest = self.0 & !p.bit() & !q.bit();
        if rest.count_ones() == 1 && self.contains(p) && self.contains(q) {
            Some(Point::from_bit_index(rest.trailing_zeros()))
        } else {
            None
        }
    }

    /// Index in the sorted line list (so `phi_inv(l) = index + 1`).
    pub fn index(self) -> usize {
        LINE_MASKS.iter().position(|&m| m == self.0).unwrap()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.points() {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_digits(s: &str, kind: &'static str) -> Result<Vec<Point>> {
    let bad = || Error::Parse {
        kind,
        input: s.to_string(),
    };
    s.trim()
        .chars()
        .map(|c| {
            let d = c.to_digit(10).ok_or_else(bad)? as u8;
            Point::new(d).map_err(|_| bad())
        })
        .collect()
}

impl FromStr for Line {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_digits(s, "line")?.as_slice() {
            &[a, b, c] => Line::from_points(a, b, c),
            _ => Err(Error::Parse {
                kind: "line",
                input: s.to_string(),
            }),
        }
    }
}

/// All seven lines, sorted.
pub fn lines() -> [Line; 7] {
    Line::all()
}

/// The duality map sending point `i` to the `i`-th line of the sorted list.
pub fn phi(p: Point) -> Line {
    Line(LINE_MASKS[p.0 as usize - 1])
}

pub fn phi_inv(l: Line) -> Point {
    Point(l.index() as u8 + 1)
}

/// The three lines through `p`, sorted.
pub fn pencil(p: Point) -> [Line; 3] {
    let mut it = LINE_MASKS
        .iter()
        .filter(|&&m| m & p.bit() != 0)
        .map(|&m| Line(m));
    [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
}

/// One of the three coordinates of an ordered pencil or ordered line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Position {
    A,
    B,
    C,
}

impl Position {
    pub const ALL: [Position; 3] = [Position::A, Position::B, Position::C];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Position> {
        Position::ALL.get(i).copied()
    }

    pub const fn letter(self) -> char {
        match self {
            Position::A => 'a',
            Position::B => 'b',
            Position::C => 'c',
        }
    }

    pub fn from_letter(c: char) -> Option<Position> {
        match c {
            'a' => Some(Position::A),
            'b' => Some(Position::B),
            'c' => Some(Position::C),
            _ => None,
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        match (chars.next().and_then(Position::from_letter), chars.next()) {
            (Some(p), None) => Ok(p),
            _ => Err(Error::Parse {
                kind: "position",
                input: s.to_string(),
            }),
        }
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A Fano line with a chosen order of its three points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedLine([Point; 3]);

impl OrderedLine {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        Line::from_points(a, b, c)?;
        Ok(OrderedLine([a, b, c]))
    }

    pub fn entries(self) -> [Point; 3] {
        self.0
    }

    pub fn entry(self, pos: Position) -> Point {
        self.0[pos.index()]
    }

    pub fn line(self) -> Line {
        Line(self.0[0].bit() | self.0[1].bit() | self.0[2].bit())
    }

    /// All 42 ordered lines in lexicographic order.
    pub fn all() -> &'static [OrderedLine] {
        static ALL: OnceLock<Vec<OrderedLine>> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut v: Vec<OrderedLine> = Line::all()
                .iter()
                .flat_map(|l| {
                    let [x, y, z] = l.points();
                    [[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
                })
                .map(OrderedLine)
                .collect();
            v.sort();
            v
        })
    }

    /// Index in [`OrderedLine::all`].
    pub fn index(self) -> usize {
        OrderedLine::all().binary_search(&self).unwrap()
    }

    /// Number of positions at which two ordered lines carry the same point.
    pub fn agreements(self, other: OrderedLine) -> usize {
        (0..3).filter(|&i| self.0[i] == other.0[i]).count()
    }
}

impl fmt::Display for OrderedLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for OrderedLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['<', '⟨'])
            .trim_end_matches(['>', '⟩']);
        match parse_digits(t, "ordered line")?.as_slice() {
            &[a, b, c] => OrderedLine::new(a, b, c),
            _ => Err(Error::Parse {
                kind: "ordered line",
                input: s.to_string(),
            }),
        }
    }
}

impl Serialize for OrderedLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An unordered pair of distinct points, the trace of a line through the
/// base point of a pencil.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: Point,
    hi: Point,
}

impl Pair {
    pub fn new(p: Point, q: Point) -> Option<Pair> {
        match p.cmp(&q) {
            std::cmp::Ordering::Less => Some(Pair { lo: p, hi: q }),
            std::cmp::Ordering::Greater => Some(Pair { lo: q, hi: p }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn points(self) -> [Point; 2] {
        [self.lo, self.hi]
    }

    pub fn mask(self) -> u8 {
        self.lo.bit() | self.hi.bit()
    }

    pub fn contains(self, p: Point) -> bool {
        self.lo == p || self.hi == p
    }

    /// The common point of two pairs meeting in exactly one point.
    pub fn meet(self, other: Pair) -> Option<Point> {
        let m = self.mask() & other.mask();
        (m.count_ones() == 1).then(|| Point::from_bit_index(m.trailing_zeros()))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lo, self.hi)
    }
}

const SUFFIXES: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

/// A point together with a linear order on the three lines through it,
/// written `(p, q_a r_a, q_b r_b, q_c r_c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPencil {
    point: Point,
    pairs: [Pair; 3],
}

impl OrderedPencil {
    pub fn new(point: Point, pairs: [Pair; 3]) -> Result<Self> {
        let mut seen = point.bit();
        for pair in pairs {
            if Line::from_mask(point.bit() | pair.mask()).is_err() || seen & pair.mask() != 0 {
                return Err(Error::InvalidPencil(format!(
                    "({point},{},{},{})",
                    pairs[0], pairs[1], pairs[2]
                )));
            }
            seen |= pair.mask();
        }
        Ok(OrderedPencil { point, pairs })
    }

    /// The pencil at `point` whose lines appear in the given order.
    pub fn from_lines(point: Point, lines: [Line; 3]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(3);
        for line in lines {
            if !line.contains(point) {
                return Err(Error::InvalidPencil(format!("line {line} misses point {point}")));
            }
            let mut it = points_of_mask(line.mask() & !point.bit());
            pairs.push(Pair::new(it.next().unwrap(), it.next().unwrap()).unwrap());
        }
        OrderedPencil::new(point, [pairs[0], pairs[1], pairs[2]])
    }

    pub fn point(self) -> Point {
        self.point
    }

    pub fn pairs(self) -> [Pair; 3] {
        self.pairs
    }

    pub fn pair(self, pos: Position) -> Pair {
        self.pairs[pos.index()]
    }

    pub fn line(self, pos: Position) -> Line {
        Line(self.point.bit() | self.pairs[pos.index()].mask())
    }

    pub fn lines(self) -> [Line; 3] {
        Position::ALL.map(|p| self.line(p))
    }

    /// All 42 ordered pencils sorted by base point and then lexicographically
    /// on the pair triple; the index in this list is the canonical vertex id.
    pub fn all() -> &'static [OrderedPencil] {
        static ALL: OnceLock<Vec<OrderedPencil>> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut v = Vec::with_capacity(42);
            for p in Point::all() {
                let [l0, l1, l2] = pencil(p);
                for order in [[l0, l1, l2], [l0, l2, l1], [l1, l0, l2], [l1, l2, l0], [l2, l0, l1], [l2, l1, l0]] {
                    v.push(OrderedPencil::from_lines(p, order).expect("pencil lines pass through p"));
                }
            }
            v.sort();
            v
        })
    }

    pub fn from_id(id: usize) -> Option<OrderedPencil> {
        OrderedPencil::all().get(id).copied()
    }

    pub fn id(self) -> usize {
        OrderedPencil::all().binary_search(&self).unwrap()
    }

    /// Short name `p^s` with `s` in `a..=f` the rank of the line order.
    pub fn short_name(self) -> String {
        format!("{}^{}", self.point, SUFFIXES[self.id() % 6])
    }

    pub fn parse_short(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            kind: "vertex name",
            input: s.to_string(),
        };
        let (p, suffix) = s.trim().split_once('^').ok_or_else(bad)?;
        let p: u8 = p.parse().map_err(|_| bad())?;
        let p = Point::new(p).map_err(|_| bad())?;
        let mut chars = suffix.chars();
        let rank = match (chars.next(), chars.next()) {
            (Some(c), None) => SUFFIXES.iter().position(|&x| x == c).ok_or_else(bad)?,
            _ => return Err(bad()),
        };
        Ok(OrderedPencil::all()[(p.0 as usize - 1) * 6 + rank])
    }

    fn parse_long(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            kind: "ordered pencil",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let point = match parse_digits(parts[0], "ordered pencil")?.as_slice() {
            &[p] => p,
            _ => return Err(bad()),
        };
        let mut pairs = Vec::with_capacity(3);
        for part in &parts[1..] {
            match parse_digits(part, "ordered pencil")?.as_slice() {
                &[q, r] => pairs.push(Pair::new(q, r).ok_or_else(bad)?),
                _ => return Err(bad()),
            }
        }
        OrderedPencil::new(point, [pairs[0], pairs[1], pairs[2]])
    }
}

impl fmt::Display for OrderedPencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.point, self.pairs[0], self.pairs[1], self.pairs[2]
        )
    }
}

/// Accepts both `1^a` and `(1,23,45,67)`.
impl FromStr for OrderedPencil {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('(') {
            OrderedPencil::parse_long(s)
        } else {
            OrderedPencil::parse_short(s)
        }
    }
}

impl Serialize for OrderedPencil {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.short_name())
    }
}

/// The four lines avoiding a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaschConfig {
    pub point: Point,
    pub lines: [Line; 4],
}

pub fn pasch(p: Point) -> PaschConfig {
    let mut it = LINE_MASKS
        .iter()
        .filter(|&&m| m & p.bit() == 0)
        .map(|&m| Line(m));
    PaschConfig {
        point: p,
        lines: [
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: u8) -> Point {
        Point::new(v).unwrap()
    }

    fn line(s: &str) -> Line {
        s.parse().unwrap()
    }

    #[test]
    fn seven_lines_form_a_projective_plane() {
        let ls = lines();
        assert_eq!(ls.len(), 7);
        assert!(ls.contains(&line("123")));
        for a in 1..=7 {
            for b in a + 1..=7 {
                let n = ls
                    .iter()
                    .filter(|l| l.contains(pt(a)) && l.contains(pt(b)))
                    .count();
                assert_eq!(n, 1, "pair {a}{b}");
            }
        }
        for p in Point::all() {
            assert_eq!(ls.iter().filter(|l| l.contains(p)).count(), 3);
        }
    }

    #[test]
    fn phi_table_and_duality() {
        assert_eq!(phi(pt(1)), line("123"));
        assert_eq!(phi_inv(line("356")), pt(7));
        for p in Point::all() {
            assert_eq!(phi_inv(phi(p)), p);
            for q in Point::all() {
                assert_eq!(phi(p).contains(q), phi(q).contains(p));
            }
        }
        // each line contains the images of the lines through phi_inv(line)
        for l in lines() {
            for k in pencil(phi_inv(l)) {
                assert!(l.contains(phi_inv(k)));
            }
        }
    }

    #[test]
    fn pencil_of_one() {
        assert_eq!(pencil(pt(1)), [line("123"), line("145"), line("167")]);
        for p in Point::all() {
            assert_eq!(pencil(p).len(), 3);
        }
    }

    #[test]
    fn ordered_pencils_listing() {
        let all = OrderedPencil::all();
        assert_eq!(all.len(), 42);
        let names: Vec<String> = all[..6].iter().map(|v| v.to_string()).collect();
        assert_eq!(
            names,
            [
                "(1,23,45,67)",
                "(1,23,67,45)",
                "(1,45,23,67)",
                "(1,45,67,23)",
                "(1,67,23,45)",
                "(1,67,45,23)"
            ]
        );
        for p in Point::all() {
            assert_eq!(all.iter().filter(|v| v.point() == p).count(), 6);
        }
        let mut dedup = all.to_vec();
        dedup.dedup();
        assert_eq!(dedup.len(), 42);
    }

    #[test]
    fn short_names() {
        let v: OrderedPencil = "(1,23,45,67)".parse().unwrap();
        assert_eq!(v.short_name(), "1^a");
        let w: OrderedPencil = "(7,34,25,16)".parse().unwrap();
        assert_eq!(w.short_name(), "7^f");
        assert_eq!(OrderedPencil::parse_short("1^f").unwrap().to_string(), "(1,67,45,23)");
        for v in OrderedPencil::all() {
            assert_eq!(OrderedPencil::parse_short(&v.short_name()).unwrap(), *v);
            assert_eq!(v.to_string().parse::<OrderedPencil>().unwrap(), *v);
        }
    }

    #[test]
    fn malformed_names_rejected() {
        for bad in ["8^a", "1^g", "1a", "1^", "^a", "1^ab", "(1,23,45)", "(1,24,35,67)", "(2,13,46,56)"] {
            assert!(bad.parse::<OrderedPencil>().is_err(), "{bad}");
        }
        assert!("357".parse::<Line>().is_err());
        assert!("124".parse::<OrderedLine>().is_err());
        assert!(Point::new(0).is_err());
    }

    #[test]
    fn pasch_configurations() {
        let pc1 = pasch(pt(1));
        assert_eq!(pc1.lines, [line("246"), line("257"), line("347"), line("356")]);
        let pc4 = pasch(pt(4));
        assert_eq!(pc4.lines, [line("123"), line("167"), line("257"), line("356")]);
        for p in Point::all() {
            let pc = pasch(p);
            assert!(pc.lines.iter().all(|l| !l.contains(p)));
            let mut union: Vec<Line> = pc.lines.to_vec();
            union.extend(pencil(p));
            union.sort();
            assert_eq!(union, lines().to_vec());
        }
    }

    #[test]
    fn ordered_lines() {
        let all = OrderedLine::all();
        assert_eq!(all.len(), 42);
        assert_eq!(all[0].to_string(), "123");
        let l: OrderedLine = "426".parse().unwrap();
        assert_eq!(l.line(), line("246"));
        assert_eq!(l.entry(Position::B), pt(2));
        for (i, l) in all.iter().enumerate() {
            assert_eq!(l.index(), i);
        }
    }
}
