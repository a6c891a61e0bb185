//! Graded affine-cone presentations: multi-weighted variables, homogeneous
//! relations, conical-character classification and bounded enumeration of
//! weight-1 characters, plus the quiver loop test for weight-1 existence.

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("variable {variable:?} has a weight vector of length {got}, expected {expected}")]
    VariableWeightLength { variable: String, expected: usize, got: usize },
    #[error("relation {relation}, monomial {monomial}: exponent vector has length {got}, expected {expected}")]
    ExponentLength { relation: usize, monomial: usize, expected: usize, got: usize },
    #[error("relation {relation}, monomial {monomial} has coefficient zero")]
    ZeroCoefficient { relation: usize, monomial: usize },
    #[error("relation {relation} is inhomogeneous: monomial {monomial_a} has weight {weight_a:?} but monomial {monomial_b} has weight {weight_b:?}")]
    Inhomogeneous {
        relation: usize,
        monomial_a: usize,
        weight_a: Vec<i64>,
        monomial_b: usize,
        weight_b: Vec<i64>,
    },
    #[error("the weight list is empty")]
    EmptyWeightList,
    #[error("generator weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("enumeration bound must be at least 1")]
    BadBound,
    #[error("edge ({0:?}, {1:?}) references an undeclared vertex")]
    UndeclaredVertex(String, String),
}

/// One monomial of a relation: a nonzero rational coefficient and an
/// exponent vector over the presentation's variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Ratio<i64>,
    pub exponents: Vec<u64>,
}

/// A formal polynomial relation, stored as its monomial list.
pub type Relation = Vec<Monomial>;

/// A generator of the coordinate ring together with its weight vector under
/// the grading torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weights: Vec<i64>,
}

/// An affine cone presented by multi-weighted generators and homogeneous
/// relations. The symplectic covector records the weight of the holomorphic
/// symplectic form as a linear functional on cocharacters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePresentation {
    variables: Vec<Variable>,
    relations: Vec<Relation>,
    sympl_covector: Vec<i64>,
}

/// Classification of a single cocharacter against a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterClass {
    pub conical: bool,
    pub sympl_weight: i64,
}

/// The weight-1 conical characters found in a box scan, with the
/// boundedness certificate: `bounded` holds when no feasible character was
/// found on the boundary shell of the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight1Enumeration {
    pub characters: Vec<Vec<i64>>,
    pub bounded: bool,
}

/// Exponent bookkeeping of the plurisubharmonic Hamiltonian built from
/// homogeneous generators: w = lcm of the generator weights, and each
/// generator enters with exponent 2w/w_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiExponents {
    pub w: i64,
    pub exponents: Vec<i64>,
}

impl ConePresentation {
    pub fn new(
        variables: Vec<Variable>,
        relations: Vec<Relation>,
        sympl_covector: Vec<i64>,
    ) -> Result<Self, ConeError> {
        let rank = sympl_covector.len();
        for v in &variables {
            if v.weights.len() != rank {
                return Err(ConeError::VariableWeightLength {
                    variable: v.name.clone(),
                    expected: rank,
                    got: v.weights.len(),
                });
            }
        }
        for (ri, relation) in relations.iter().enumerate() {
            for (mi, monomial) in relation.iter().enumerate() {
                if monomial.exponents.len() != variables.len() {
                    return Err(ConeError::ExponentLength {
                        relation: ri,
                        monomial: mi,
                        expected: variables.len(),
                        got: monomial.exponents.len(),
                    });
                }
                if monomial.coeff.is_zero() {
                    return Err(ConeError::ZeroCoefficient { relation: ri, monomial: mi });
                }
            }
        }
        Ok(ConePresentation { variables, relations, sympl_covector })
    }

    /// The built-in presentation of the A_n hypersurface XY = Z^{n+1} with
    /// weights X:(1,0), Y:(-1,n+1), Z:(0,1) and symplectic covector (0,1).
    pub fn an(n: u32) -> Self {
        let n = n as i64;
        let var = |name: &str, w: [i64; 2]| Variable { name: name.into(), weights: w.to_vec() };
        let mono = |coeff: i64, exps: [u64; 3]| Monomial {
            coeff: Ratio::from_integer(coeff),
            exponents: exps.to_vec(),
        };
        ConePresentation {
            variables: vec![var("X", [1, 0]), var("Y", [-1, n + 1]), var("Z", [0, 1])],
            relations: vec![vec![mono(1, [1, 1, 0]), mono(-1, [0, 0, (n as u64) + 1])]],
            sympl_covector: vec![0, 1],
        }
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn sympl_covector(&self) -> &[i64] {
        &self.sympl_covector
    }

    /// Rank of the grading torus.
    pub fn rank(&self) -> usize {
        self.sympl_covector.len()
    }

    fn monomial_weight(&self, monomial: &Monomial) -> Vec<i64> {
        let mut weight = vec![0i64; self.rank()];
        for (var, &exp) in self.variables.iter().zip(&monomial.exponents) {
            for (acc, &w) in weight.iter_mut().zip(&var.weights) {
                *acc += exp as i64 * w;
            }
        }
        weight
    }

    /// Per-relation common weight vectors; fails on the first relation whose
    /// monomials disagree, naming the offending pair. Empty relations get
    /// the zero weight.
    pub fn check_homogeneous(&self) -> Result<Vec<Vec<i64>>, ConeError> {
        let mut weights = Vec::with_capacity(self.relations.len());
        for (ri, relation) in self.relations.iter().enumerate() {
            let mut common: Option<(usize, Vec<i64>)> = None;
            for (mi, monomial) in relation.iter().enumerate() {
                let w = self.monomial_weight(monomial);
                match &common {
                    None => common = Some((mi, w)),
                    Some((first_idx, first_w)) => {
                        if *first_w != w {
                            return Err(ConeError::Inhomogeneous {
                                relation: ri,
                                monomial_a: *first_idx,
                                weight_a: first_w.clone(),
                                monomial_b: mi,
                                weight_b: w,
                            });
                        }
                    }
                }
            }
            weights.push(common.map(|(_, w)| w).unwrap_or_else(|| vec![0; self.rank()]));
        }
        Ok(weights)
    }

    /// Pairs a cocharacter against every variable weight: the action is
    /// conical when every generator has strictly positive weight.
    pub fn classify_character(&self, character: &[i64]) -> Result<CharacterClass, ConeError> {
        if character.len() != self.rank() {
            return Err(ConeError::DimensionMismatch {
                expected: self.rank(),
                got: character.len(),
            });
        }
        let conical = self.variables.iter().all(|v| dot(&v.weights, character) > 0);
        Ok(CharacterClass { conical, sympl_weight: dot(&self.sympl_covector, character) })
    }

    /// Scans the box |λ_j| ≤ bound for conical characters of symplectic
    /// weight 1, in lexicographic order. The enumeration is certified
    /// bounded when no feasible character touches the boundary shell.
    pub fn enumerate_weight1(&self, bound: u64) -> Result<Weight1Enumeration, ConeError> {
        if bound == 0 {
            return Err(ConeError::BadBound);
        }
        let bound = bound as i64;
        let rank = self.rank();
        let mut characters = Vec::new();
        let mut bounded = true;
        let mut current = vec![-bound; rank];
        loop {
            let class = self.classify_character(&current)?;
            if class.conical && class.sympl_weight == 1 {
                if current.iter().any(|&c| c.abs() == bound) {
                    bounded = false;
                }
                characters.push(current.clone());
            }
            // Lexicographic increment: last coordinate fastest would give
            // colex; advance from the rightmost coordinate but treat the
            // vector as a big-endian counter so the output is lex-sorted.
            let mut idx = rank;
            loop {
                if idx == 0 {
                    return Ok(Weight1Enumeration { characters, bounded });
                }
                idx -= 1;
                if current[idx] < bound {
                    current[idx] += 1;
                    for c in current.iter_mut().skip(idx + 1) {
                        *c = -bound;
                    }
                    break;
                }
            }
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// w = lcm of the generator weights and the per-generator exponents 2w/w_i.
pub fn phi_exponents(weights: &[i64]) -> Result<PhiExponents, ConeError> {
    if weights.is_empty() {
        return Err(ConeError::EmptyWeightList);
    }
    let mut w: i64 = 1;
    for &weight in weights {
        if weight < 1 {
            return Err(ConeError::NonPositiveWeight(weight));
        }
        w = num_integer::lcm(w, weight);
    }
    Ok(PhiExponents { w, exponents: weights.iter().map(|&wi| 2 * w / wi).collect() })
}

/// A quiver given by vertex ids and directed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverData {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// Loop-edge verdict: quiver varieties admit a weight-1 conical action only
/// without loop edges; with a loop the Stein structure is subcritical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuiverVerdict {
    pub admissible: bool,
    pub subcritical: bool,
}

impl QuiverData {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> Result<Self, ConeError> {
        for (tail, head) in &edges {
            if !vertices.contains(tail) || !vertices.contains(head) {
                return Err(ConeError::UndeclaredVertex(tail.clone(), head.clone()));
            }
        }
        Ok(QuiverData { vertices, edges })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    pub fn weight1_admissible(&self) -> QuiverVerdict {
        let admissible = self.edges.iter().all(|(tail, head)| tail != head);
        QuiverVerdict { admissible, subcritical: !admissible }
    }
}
