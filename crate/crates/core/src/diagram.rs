//! Planar diagram codes, face tracing, checkerboard colorings and Goeritz
//! matrices.
//!
//! A crossing `X(a,b,c,d)` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand (Knot Atlas convention). Quadrant
//! `q` (0-based here) is the corner between tuple positions `q` and `q + 1`
//! mod 4. Quadrants 0 and 2 are the corners swept counterclockwise from an
//! under-strand to an over-strand; a Goeritz class occupying them gives the
//! crossing type +1, otherwise −1.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::intlinalg::{Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("empty diagram (the crossingless unknot is written `U`)")]
    Empty,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("edge label {label} is outside 1..={max}")]
    LabelOutOfRange { label: u32, max: u32 },

    #[error("edge label {label} appears {count} times (expected exactly 2)")]
    LabelCount { label: u32, count: usize },

    #[error("diagram has {0} components; only knots are supported")]
    MultiComponent(usize),

    #[error("face tracing found {found} faces, expected {expected}: code is not planar")]
    NonPlanar { found: usize, expected: usize },

    #[error("faces admit no checkerboard coloring")]
    ColoringObstruction,

    #[error("face {face} is not in the {class} class")]
    FaceNotInClass { face: usize, class: FaceColor },

    #[error("invalid pretzel parameters: {0}")]
    Pretzel(String),
}

pub type DiagramResult<T> = Result<T, DiagramError>;

/// A validated knot diagram. Zero crossings is the unknot `U`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
}

/// A corner of a crossing: (crossing index, quadrant in 0..4).
pub type Slot = (usize, u8);

impl PlanarDiagram {
    pub fn unknot() -> Self {
        Self { crossings: Vec::new() }
    }

    /// Validates labels, single-component strand structure and planarity.
    pub fn new(crossings: Vec<[u32; 4]>) -> DiagramResult<Self> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let max = 2 * crossings.len() as u32;
        let mut count = vec![0usize; max as usize + 1];
        for &label in crossings.iter().flatten() {
            if label == 0 || label > max {
                return Err(DiagramError::LabelOutOfRange { label, max });
            }
            count[label as usize] += 1;
        }
        if let Some(label) = (1..=max).find(|&l| count[l as usize] != 2) {
            return Err(DiagramError::LabelCount { label, count: count[label as usize] });
        }
        let d = Self { crossings };
        let components = d.component_count();
        if components != 1 {
            return Err(DiagramError::MultiComponent(components));
        }
        faces(&d)?;
        Ok(d)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn is_unknot_diagram(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Both (crossing, position) occurrences of every edge label, indexed by label.
    fn occurrences(&self) -> Vec<[(usize, u8); 2]> {
        let mut occ = vec![[(usize::MAX, 0u8); 2]; self.edge_count() + 1];
        let mut seen = vec![0usize; self.edge_count() + 1];
        for (c, x) in self.crossings.iter().enumerate() {
            for (p, &label) in x.iter().enumerate() {
                let l = label as usize;
                occ[l][seen[l]] = (c, p as u8);
                seen[l] += 1;
            }
        }
        occ
    }

    fn other_end(occ: &[[(usize, u8); 2]], label: u32, here: (usize, u8)) -> (usize, u8) {
        let [a, b] = occ[label as usize];
        if a == here {
            b
        } else {
            a
        }
    }

    /// Number of closed strands: positions 0-2 and 1-3 pass straight
    /// through a crossing, edges join their two occurrences.
    fn component_count(&self) -> usize {
        let occ = self.occurrences();
        let mut visited = vec![false; self.edge_count() + 1];
        let mut components = 0;
        for start in 1..=self.edge_count() {
            if visited[start] {
                continue;
            }
            components += 1;
            let mut here = occ[start][0];
            loop {
                let label = self.crossings[here.0][here.1 as usize];
                if visited[label as usize] {
                    break;
                }
                visited[label as usize] = true;
                let far = Self::other_end(&occ, label, here);
                here = (far.0, (far.1 + 2) % 4);
            }
        }
        components
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return write!(f, "U");
        }
        let terms: Vec<String> = self.crossings.iter().map(|[a, b, c, d]| format!("X({a},{b},{c},{d})")).collect();
        write!(f, "{}", terms.join(" "))
    }
}

impl FromStr for PlanarDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> DiagramResult<Self> {
        parse_pd(s)
    }
}

/// Parses `X(a,b,c,d) X(...) ...` or the single token `U`.
pub fn parse_pd(text: &str) -> DiagramResult<PlanarDiagram> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(DiagramError::Empty);
    }
    if trimmed == "U" {
        return Ok(PlanarDiagram::unknot());
    }

    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut crossings = Vec::new();
    let syntax = |pos: usize, msg: &str| DiagramError::Syntax { pos, msg: msg.to_string() };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'X' {
            return Err(syntax(pos, "expected `X(`"));
        }
        pos += 1;
        if bytes.get(pos) != Some(&b'(') {
            return Err(syntax(pos, "expected `(`"));
        }
        pos += 1;
        let mut labels = [0u32; 4];
        for (k, slot) in labels.iter_mut().enumerate() {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(pos, "expected a positive integer label"));
            }
            *slot = text[start..pos].parse().map_err(|_| syntax(start, "label too large"))?;
            skip_ws(&mut pos);
            let want = if k == 3 { b')' } else { b',' };
            if bytes.get(pos) != Some(&want) {
                let msg = if k == 3 { "expected `)`" } else { "expected `,`" };
                return Err(syntax(pos, msg));
            }
            pos += 1;
        }
        crossings.push(labels);
    }
    PlanarDiagram::new(crossings)
}

/// One face of the diagram: the cyclic sequence of crossing corners on its
/// boundary. Faces are identified by their position in [`FaceSet::faces`],
/// which is sorted by least slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub slots: Vec<Slot>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// `slot_face[c][q]` is the face containing corner `(c, q)`.
    slot_face: Vec<[usize; 4]>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, slot: Slot) -> usize {
        self.slot_face[slot.0][slot.1 as usize]
    }
}

/// Traces faces through the rotation system: leaving corner `(c, q)` across
/// the edge at position `q + 1`, the walk arrives at the far occurrence
/// `(c', p')` of that edge and continues in corner `(c', p')`.
pub fn faces(d: &PlanarDiagram) -> DiagramResult<FaceSet> {
    let n = d.crossing_count();
    if n == 0 {
        let outside = Face { slots: Vec::new() };
        return Ok(FaceSet { faces: vec![outside.clone(), outside], slot_face: Vec::new() });
    }
    let occ = d.occurrences();
    let mut slot_face = vec![[usize::MAX; 4]; n];
    let mut traced: Vec<Face> = Vec::new();
    for c in 0..n {
        for q in 0..4u8 {
            if slot_face[c][q as usize] != usize::MAX {
                continue;
            }
            let id = traced.len();
            let mut slots = Vec::new();
            let mut here = (c, q);
            loop {
                if slot_face[here.0][here.1 as usize] != usize::MAX {
                    if here != (c, q) {
                        return Err(DiagramError::NonPlanar { found: traced.len(), expected: n + 2 });
                    }
                    break;
                }
                slot_face[here.0][here.1 as usize] = id;
                slots.push(here);
                let pos = (here.1 + 1) % 4;
                let label = d.crossings[here.0][pos as usize];
                here = PlanarDiagram::other_end(&occ, label, (here.0, pos));
            }
            traced.push(Face { slots });
        }
    }
    if traced.len() != n + 2 {
        return Err(DiagramError::NonPlanar { found: traced.len(), expected: n + 2 });
    }
    // Slots were visited in (c, q) order, so trace order is already by least slot.
    debug_assert!(traced.windows(2).all(|w| w[0].slots.iter().min() < w[1].slots.iter().min()));
    Ok(FaceSet { faces: traced, slot_face })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceColor {
    White,
    Black,
}

impl FaceColor {
    pub fn other(self) -> Self {
        match self {
            FaceColor::White => FaceColor::Black,
            FaceColor::Black => FaceColor::White,
        }
    }
}

impl fmt::Display for FaceColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FaceColor::White => "white",
            FaceColor::Black => "black",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub faces: FaceSet,
    pub color: Vec<FaceColor>,
}

impl Coloring {
    pub fn faces_of(&self, class: FaceColor) -> Vec<usize> {
        (0..self.color.len()).filter(|&i| self.color[i] == class).collect()
    }
}

/// Proper two-coloring of the faces. The face in the corner just clockwise
/// of the first occurrence of the highest edge label is black; for `U` the
/// first face is black.
pub fn checkerboard(d: &PlanarDiagram, f: &FaceSet) -> DiagramResult<Coloring> {
    let nf = f.len();
    let mut color: Vec<Option<FaceColor>> = vec![None; nf];
    if d.crossing_count() == 0 {
        return Ok(Coloring { faces: f.clone(), color: vec![FaceColor::Black, FaceColor::White] });
    }

    // Faces meeting along an edge at a crossing must differ.
    let mut adj = vec![Vec::new(); nf];
    for c in 0..d.crossing_count() {
        for q in 0..4u8 {
            let a = f.face_of((c, q));
            let b = f.face_of((c, (q + 1) % 4));
            adj[a].push(b);
            adj[b].push(a);
        }
    }

    let top = d.edge_count() as u32;
    let (c0, p0) = d
        .crossings
        .iter()
        .enumerate()
        .find_map(|(c, x)| x.iter().position(|&l| l == top).map(|p| (c, p as u8)))
        .expect("validated diagram contains its highest label");
    let root = f.face_of((c0, (p0 + 3) % 4));

    color[root] = Some(FaceColor::Black);
    let mut queue = VecDeque::from([root]);
    while let Some(a) = queue.pop_front() {
        let ca = color[a].expect("queued faces are colored");
        for &b in &adj[a] {
            match color[b] {
                None => {
                    color[b] = Some(ca.other());
                    queue.push_back(b);
                }
                Some(cb) if cb == ca => return Err(DiagramError::ColoringObstruction),
                Some(_) => {}
            }
        }
    }
    let color = color.into_iter().collect::<Option<Vec<_>>>().ok_or(DiagramError::ColoringObstruction)?;
    Ok(Coloring { faces: f.clone(), color })
}

/// Goeritz matrix of one color class with one face deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzMatrix {
    pub matrix: IntMatrix,
    pub deleted_face: usize,
    pub color_class: FaceColor,
    /// Face index of each remaining row/column.
    pub row_faces: Vec<usize>,
}

/// Goeritz matrix before deletion, rows indexed by the class's faces in
/// increasing order. Every row sums to zero.
pub fn goeritz_full(d: &PlanarDiagram, c: &Coloring, class: FaceColor) -> (IntMatrix, Vec<usize>) {
    let members = c.faces_of(class);
    let mut index = vec![usize::MAX; c.color.len()];
    for (i, &face) in members.iter().enumerate() {
        index[face] = i;
    }
    let k = members.len();
    let mut g = IntMatrix::zeros(k, k);
    for x in 0..d.crossing_count() {
        let (start, eta): (u8, Int) = if c.color[c.faces.face_of((x, 0))] == class { (0, 1) } else { (1, -1) };
        let fi = index[c.faces.face_of((x, start))];
        let fj = index[c.faces.face_of((x, start + 2))];
        if fi != fj {
            g[(fi, fj)] -= eta;
            g[(fj, fi)] -= eta;
        }
    }
    for i in 0..k {
        let off: Int = (0..k).filter(|&j| j != i).map(|j| g[(i, j)]).sum();
        g[(i, i)] = -off;
    }
    (g, members)
}

pub fn goeritz_matrix(
    d: &PlanarDiagram,
    c: &Coloring,
    class: FaceColor,
    deleted_face: usize,
) -> DiagramResult<GoeritzMatrix> {
    if c.color.get(deleted_face) != Some(&class) {
        return Err(DiagramError::FaceNotInClass { face: deleted_face, class });
    }
    let (full, members) = goeritz_full(d, c, class);
    let row = members.iter().position(|&f| f == deleted_face).expect("member of class");
    let row_faces = members.iter().copied().filter(|&f| f != deleted_face).collect();
    Ok(GoeritzMatrix { matrix: full.delete_row_col(row, row), deleted_face, color_class: class, row_faces })
}

/// White class, least white face deleted.
pub fn default_goeritz(d: &PlanarDiagram) -> DiagramResult<GoeritzMatrix> {
    let f = faces(d)?;
    let c = checkerboard(d, &f)?;
    let first = c.faces_of(FaceColor::White)[0];
    goeritz_matrix(d, &c, FaceColor::White, first)
}

/// Every (class, deleted face) Goeritz matrix of the diagram.
pub fn all_goeritz(d: &PlanarDiagram) -> DiagramResult<Vec<GoeritzMatrix>> {
    let f = faces(d)?;
    let c = checkerboard(d, &f)?;
    let mut out = Vec::new();
    for class in [FaceColor::White, FaceColor::Black] {
        for face in c.faces_of(class) {
            out.push(goeritz_matrix(d, &c, class, face)?);
        }
    }
    Ok(out)
}

// Port order around a synthetic crossing, counterclockwise from north-east.
const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

/// Standard three-column pretzel diagram P(a, b, c): column `i` is a
/// vertical twist region of |param| crossings, consecutive columns are
/// joined at top and bottom, the last column wraps around to the first.
pub fn pretzel_diagram(a: i64, b: i64, c: i64) -> DiagramResult<PlanarDiagram> {
    let params = [a, b, c];
    if params.contains(&0) {
        return Err(DiagramError::Pretzel(format!("P({a},{b},{c}): every parameter needs |x| >= 1")));
    }
    let even = params.iter().filter(|&&p| p % 2 == 0).count();
    if even >= 2 {
        return Err(DiagramError::Pretzel(format!("P({a},{b},{c}) has {even} even parameters and is a link")));
    }

    let sizes: Vec<usize> = params.iter().map(|p| p.unsigned_abs() as usize).collect();
    let n: usize = sizes.iter().sum();
    let mut link = vec![[(usize::MAX, 0u8); 4]; n];
    // true: the NW-SE strand passes over.
    let mut nw_over = vec![false; n];
    let join = |link: &mut Vec<[(usize, u8); 4]>, x: (usize, u8), y: (usize, u8)| {
        link[x.0][x.1 as usize] = y;
        link[y.0][y.1 as usize] = x;
    };

    let mut base = Vec::with_capacity(3);
    let mut next = 0;
    for (i, &m) in sizes.iter().enumerate() {
        base.push(next);
        for j in 0..m {
            nw_over[next + j] = params[i] > 0;
            if j + 1 < m {
                join(&mut link, (next + j, SW), (next + j + 1, NW));
                join(&mut link, (next + j, SE), (next + j + 1, NE));
            }
        }
        next += m;
    }
    let top = |i: usize| base[i];
    let bottom = |i: usize| base[i] + sizes[i] - 1;
    for i in 0..3 {
        let j = (i + 1) % 3;
        join(&mut link, (top(i), NE), (top(j), NW));
        join(&mut link, (bottom(i), SE), (bottom(j), SW));
    }

    // Walk the strand, labelling edges 1, 2, ... in traversal order.
    let mut label = vec![[0u32; 4]; n];
    let mut entry = vec![[false; 4]; n];
    let start = (0usize, NW);
    let mut here = start;
    let mut next_label = 1u32;
    loop {
        entry[here.0][here.1 as usize] = true;
        let exit = (here.0, (here.1 + 2) % 4);
        let arrive = link[exit.0][exit.1 as usize];
        label[exit.0][exit.1 as usize] = next_label;
        label[arrive.0][arrive.1 as usize] = next_label;
        next_label += 1;
        here = arrive;
        if here == start {
            break;
        }
    }
    let walked = (next_label - 1) as usize;
    if walked != 2 * n {
        return Err(DiagramError::Pretzel(format!(
            "P({a},{b},{c}) is a link: one strand covers {walked} of {} edges",
            2 * n
        )));
    }

    let crossings = (0..n)
        .map(|x| {
            let under = if nw_over[x] { [NE, SW] } else { [NW, SE] };
            let incoming = *under
                .iter()
                .find(|&&p| entry[x][p as usize])
                .expect("strand enters each crossing along the under pair once");
            let mut t = [0u32; 4];
            for (k, slot) in t.iter_mut().enumerate() {
                *slot = label[x][((incoming as usize) + k) % 4];
            }
            t
        })
        .collect();
    PlanarDiagram::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branched_cover::{branched_homology, knot_determinant};
    use crate::intlinalg::determinant;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn parses_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.to_string(), TREFOIL);
        assert_eq!(parse_pd(" X( 1, 4,2,5)X(3,6,4,1)  X(5,2,6,3) ").unwrap(), d);
    }

    #[test]
    fn empty_and_unknot_token() {
        assert_eq!(parse_pd(""), Err(DiagramError::Empty));
        assert_eq!(parse_pd("   "), Err(DiagramError::Empty));
        let u = parse_pd("U").unwrap();
        assert!(u.is_unknot_diagram());
        assert_eq!(u.to_string(), "U");
    }

    #[test]
    fn kink_is_accepted_as_unknot() {
        // Validator outcome: one component, three faces, so the one-crossing
        // kink of the unknot is accepted.
        let d = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(faces(&d).unwrap().len(), 3);
        let c = checkerboard(&d, &faces(&d).unwrap()).unwrap();
        for g in all_goeritz(&d).unwrap() {
            assert!(branched_homology(&g).unwrap().is_trivial());
            assert_eq!(knot_determinant(&g).unwrap(), 1);
        }
        assert_eq!(c.color.len(), 3);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_pd("Y(1,2,3,4)"), Err(DiagramError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_pd("X(1,2,3)"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_pd("X(1,2,3,4"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_pd("X(1,-2,3,4)"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_pd("x(1,2,3,4)"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_pd("U U"), Err(DiagramError::Syntax { .. })));
    }

    #[test]
    fn label_errors() {
        assert_eq!(
            parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)"),
            Err(DiagramError::LabelOutOfRange { label: 7, max: 6 })
        );
        assert_eq!(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,6)"), Err(DiagramError::LabelCount { label: 3, count: 1 }));
    }

    #[test]
    fn hopf_link_rejected() {
        assert_eq!(parse_pd("X(4,1,3,2) X(2,3,1,4)"), Err(DiagramError::MultiComponent(2)));
    }

    #[test]
    fn face_counts() {
        assert_eq!(faces(&parse_pd(TREFOIL).unwrap()).unwrap().len(), 5);
        assert_eq!(faces(&parse_pd(FIGURE_EIGHT).unwrap()).unwrap().len(), 6);
        assert_eq!(faces(&PlanarDiagram::unknot()).unwrap().len(), 2);
    }

    #[test]
    fn every_slot_in_exactly_one_face() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let f = faces(&d).unwrap();
        let mut all: Vec<Slot> = f.faces.iter().flat_map(|x| x.slots.clone()).collect();
        all.sort();
        let expected: Vec<Slot> = (0..4).flat_map(|c| (0..4u8).map(move |q| (c, q))).collect();
        assert_eq!(all, expected);
    }

    fn assert_alternating(d: &PlanarDiagram, c: &Coloring) {
        for x in 0..d.crossing_count() {
            let col: Vec<FaceColor> = (0..4u8).map(|q| c.color[c.faces.face_of((x, q))]).collect();
            assert_eq!(col[0], col[2]);
            assert_eq!(col[1], col[3]);
            assert_ne!(col[0], col[1]);
        }
    }

    #[test]
    fn trefoil_coloring_and_goeritz() {
        let d = parse_pd(TREFOIL).unwrap();
        let f = faces(&d).unwrap();
        let c = checkerboard(&d, &f).unwrap();
        assert_alternating(&d, &c);
        let mut sizes = [c.faces_of(FaceColor::White).len(), c.faces_of(FaceColor::Black).len()];
        sizes.sort();
        assert_eq!(sizes, [2, 3]);

        let small = if c.faces_of(FaceColor::White).len() == 2 { FaceColor::White } else { FaceColor::Black };
        let g = goeritz_matrix(&d, &c, small, c.faces_of(small)[0]).unwrap();
        assert_eq!(g.matrix.rows(), 1);
        assert_eq!(g.matrix[(0, 0)].abs(), 3);
    }

    #[test]
    fn figure_eight_goeritz() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let c = checkerboard(&d, &faces(&d).unwrap()).unwrap();
        assert_alternating(&d, &c);
        for g in all_goeritz(&d).unwrap() {
            assert_eq!(determinant(&g.matrix).unwrap().abs(), 5);
            assert!(g.matrix.is_symmetric());
        }
    }

    #[test]
    fn full_goeritz_rows_sum_to_zero() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let c = checkerboard(&d, &faces(&d).unwrap()).unwrap();
        for class in [FaceColor::White, FaceColor::Black] {
            let (g, members) = goeritz_full(&d, &c, class);
            assert_eq!(members, c.faces_of(class));
            for i in 0..g.rows() {
                assert_eq!(g.row(i).iter().sum::<Int>(), 0);
            }
        }
    }

    #[test]
    fn unknot_goeritz_is_empty() {
        let g = default_goeritz(&PlanarDiagram::unknot()).unwrap();
        assert_eq!((g.matrix.rows(), g.matrix.cols()), (0, 0));
        assert!(branched_homology(&g).unwrap().is_trivial());
        assert_eq!(knot_determinant(&g).unwrap(), 1);
    }

    #[test]
    fn deleted_face_must_be_in_class() {
        let d = parse_pd(TREFOIL).unwrap();
        let c = checkerboard(&d, &faces(&d).unwrap()).unwrap();
        let black = c.faces_of(FaceColor::Black)[0];
        assert_eq!(
            goeritz_matrix(&d, &c, FaceColor::White, black),
            Err(DiagramError::FaceNotInClass { face: black, class: FaceColor::White })
        );
    }

    fn pretzel_det(a: i64, b: i64, c: i64) -> u64 {
        knot_determinant(&default_goeritz(&pretzel_diagram(a, b, c).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn pretzel_examples() {
        assert_eq!(pretzel_diagram(-2, 1, 3).unwrap().crossing_count(), 6);
        assert_eq!(pretzel_det(-2, 1, 3), 5);
        assert_eq!(pretzel_diagram(-4, 3, 21).unwrap().crossing_count(), 28);
        assert_eq!(pretzel_det(-4, 3, 21), 33);
        assert_eq!(pretzel_diagram(1, 1, 1).unwrap().crossing_count(), 3);
        assert_eq!(pretzel_det(1, 1, 1), 3);
    }

    #[test]
    fn pretzel_links_rejected() {
        assert!(matches!(pretzel_diagram(2, 2, 1), Err(DiagramError::Pretzel(_))));
        assert!(matches!(pretzel_diagram(0, 1, 1), Err(DiagramError::Pretzel(_))));
    }

    #[test]
    fn pretzel_determinant_family() {
        for p in (2i64..=6).step_by(2) {
            for q in (1..=9).step_by(2) {
                for r in (1..=9).step_by(2) {
                    let formula = (-p * q - p * r + q * r).unsigned_abs();
                    assert_eq!(pretzel_det(-p, q, r), formula, "P(-{p},{q},{r})");
                }
            }
        }
    }

    #[test]
    fn pretzel_output_reparses() {
        let d = pretzel_diagram(-2, 3, 5).unwrap();
        assert_eq!(parse_pd(&d.to_string()).unwrap(), d);
    }
}
