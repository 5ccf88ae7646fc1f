use std::fmt;

use crate::error::{Error, Result};

/// A variable (1-based) with a polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        Literal { var, positive }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    /// From a nonzero DIMACS integer.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        (value != 0).then(|| Literal::new(value.unsigned_abs() as usize, value > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn is_true_under(self, assignment: &Assignment) -> bool {
        assignment.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "~x{}", self.var)
        }
    }
}

/// A truth value for each variable `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    /// `values[i]` is the value of variable `i + 1`.
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// Bit `i` of `bits` is the value of variable `i + 1`.
    pub fn from_bits(variable_count: usize, bits: u64) -> Self {
        Assignment {
            values: (0..variable_count).map(|i| bits >> i & 1 == 1).collect(),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// The literal made true for `var`.
    pub fn chosen_literal(&self, var: usize) -> Literal {
        Literal::new(var, self.value(var))
    }
}

/// A 3-CNF formula: every clause has three literals on three distinct
/// variables, which rules out repeated and complementary literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var == 0 || lit.var > variable_count {
                    return Err(Error::InvalidFormula(format!(
                        "clause {} uses variable {} outside 1..={variable_count}",
                        j + 1,
                        lit.var
                    )));
                }
            }
            let [a, b, c] = clause.map(|l| l.var);
            if a == b || a == c || b == c {
                return Err(Error::InvalidFormula(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// 1-based index of the first clause `assignment` falsifies.
    pub fn first_false_clause(&self, assignment: &Assignment) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|l| l.is_true_under(assignment)))
            .map(|j| j + 1)
    }

    pub fn is_satisfied_by(&self, assignment: &Assignment) -> bool {
        assignment.variable_count() == self.variable_count
            && self.first_false_clause(assignment).is_none()
    }

    /// Checks `assignment` covers every variable and satisfies every clause.
    pub fn check_satisfying(&self, assignment: &Assignment) -> Result<()> {
        if assignment.variable_count() != self.variable_count {
            return Err(Error::InvalidFormula(format!(
                "assignment has {} values for {} variables",
                assignment.variable_count(),
                self.variable_count
            )));
        }
        match self.first_false_clause(assignment) {
            Some(clause) => Err(Error::Unsatisfying { clause }),
            None => Ok(()),
        }
    }

    /// Parses DIMACS CNF: `c` comment lines, one `p cnf k l` header, then
    /// 0-terminated clauses, each with exactly three literals.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Dimacs { line, message };
        let mut header: Option<(usize, usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<(Literal, usize)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(err(line_no, "second problem line".into()));
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(err(
                        line_no,
                        "expected `p cnf <variables> <clauses>`".into(),
                    ));
                }
                let k = parts[2]
                    .parse()
                    .map_err(|_| err(line_no, format!("bad variable count `{}`", parts[2])))?;
                let l = parts[3]
                    .parse()
                    .map_err(|_| err(line_no, format!("bad clause count `{}`", parts[3])))?;
                header = Some((k, l, line_no));
                continue;
            }
            let Some((k, _, _)) = header else {
                return Err(err(line_no, "clause before the problem line".into()));
            };
            for token in line.split_whitespace() {
                let value: i64 = token
                    .parse()
                    .map_err(|_| err(line_no, format!("bad literal `{token}`")))?;
                match Literal::from_dimacs(value) {
                    None => {
                        let [a, b, c] =
                            <[(Literal, usize); 3]>::try_from(std::mem::take(&mut current))
                                .map_err(|v| {
                                    err(
                                        line_no,
                                        format!("clause has {} literals, expected 3", v.len()),
                                    )
                                })?;
                        clauses.push(([a.0, b.0, c.0], line_no));
                    }
                    Some(lit) => {
                        if lit.var > k {
                            return Err(err(
                                line_no,
                                format!("variable {} exceeds declared count {k}", lit.var),
                            ));
                        }
                        current.push((lit, line_no));
                    }
                }
            }
        }
        let Some((k, l, header_line)) = header else {
            return Err(err(0, "missing problem line".into()));
        };
        if let Some(&(_, line)) = current.first() {
            return Err(err(line, "last clause is not terminated by 0".into()));
        }
        if clauses.len() != l {
            return Err(err(
                header_line,
                format!("header declares {l} clauses, found {}", clauses.len()),
            ));
        }
        for (clause, line) in &clauses {
            let [a, b, c] = clause.map(|x| x.var);
            if a == b || a == c || b == c {
                return Err(err(*line, "clause repeats a variable".into()));
            }
        }
        CnfFormula::new(k, clauses.into_iter().map(|(c, _)| c).collect())
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!(
                "{} {} {} 0\n",
                c[0].to_dimacs(),
                c[1].to_dimacs(),
                c[2].to_dimacs()
            ));
        }
        out
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("({} ∨ {} ∨ {})", c[0], c[1], c[2]))
            .collect();
        f.write_str(&parts.join(" ∧ "))
    }
}

/// Default largest variable count [`sat_bruteforce`] accepts.
pub const DEFAULT_SAT_GUARD: usize = 24;

/// A satisfying assignment by trying all `2^k`, or `None` after exhausting
/// them. The first hit in counting order is returned.
pub fn sat_bruteforce(cnf: &CnfFormula, guard: usize) -> Result<Option<Assignment>> {
    let k = cnf.variable_count();
    if k > guard.min(63) {
        return Err(Error::GuardExceeded {
            what: "brute-force SAT variables",
            size: k,
            guard: guard.min(63),
        });
    }
    let masks: Vec<[(u64, bool); 3]> = cnf
        .clauses()
        .iter()
        .map(|c| c.map(|l| (1u64 << (l.var - 1), l.positive)))
        .collect();
    for bits in 0..1u64 << k {
        let ok = masks
            .iter()
            .all(|c| c.iter().any(|&(m, pos)| (bits & m != 0) == pos));
        if ok {
            return Ok(Some(Assignment::from_bits(k, bits)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: &str = "c example\np cnf 4 3\n-1 2 -3 0\n1 -3 4 0\n-1 -3 -4 0\n";

    #[test]
    fn parses_and_prints_dimacs() {
        let f = CnfFormula::parse_dimacs(FIG2).unwrap();
        assert_eq!(f.variable_count(), 4);
        assert_eq!(f.clause_count(), 3);
        assert_eq!(f.clauses()[0][0], Literal::new(1, false));
        assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn literals_may_span_lines() {
        let f = CnfFormula::parse_dimacs("p cnf 3 1\n1 -2\n3 0\n").unwrap();
        assert_eq!(f.clause_count(), 1);
    }

    #[test]
    fn rejects_malformed_input() {
        let bad = [
            ("1 2 3 0\n", 1),
            ("p cnf 3 1\n1 2 0\n", 2),
            ("p cnf 3 1\n1 2 x 0\n", 2),
            ("p cnf 3 1\n1 -1 2 0\n", 2),
            ("p cnf 2 1\n1 2 3 0\n", 2),
            ("p cnf 3 2\n1 2 3 0\n", 1),
            ("p cnf 3 1\n1 2 3\n", 2),
        ];
        for (text, line) in bad {
            match CnfFormula::parse_dimacs(text) {
                Err(Error::Dimacs { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn invariants_reject_single_variable_clauses() {
        let x = Literal::new(1, true);
        assert!(CnfFormula::new(1, vec![[x, x, x]]).is_err());
        assert!(CnfFormula::new(1, vec![[x, x.negated(), x]]).is_err());
    }

    #[test]
    fn brute_force_sat() {
        let f = CnfFormula::parse_dimacs(FIG2).unwrap();
        let all_false = Assignment::new(vec![false; 4]);
        assert!(f.is_satisfied_by(&all_false));
        assert_eq!(sat_bruteforce(&f, 24).unwrap(), Some(all_false));
        // all eight sign patterns over three variables
        let cube: Vec<[Literal; 3]> = (0..8)
            .map(|b| [0, 1, 2].map(|i| Literal::new(i + 1, b >> i & 1 == 1)))
            .collect();
        let unsat = CnfFormula::new(3, cube).unwrap();
        assert_eq!(sat_bruteforce(&unsat, 24).unwrap(), None);
        assert!(sat_bruteforce(&unsat, 2).is_err());
    }

    #[test]
    fn unsatisfying_assignment_names_a_clause() {
        let f = CnfFormula::parse_dimacs(FIG2).unwrap();
        let a = Assignment::new(vec![true, false, true, true]);
        assert_eq!(
            f.check_satisfying(&a),
            Err(Error::Unsatisfying { clause: 1 })
        );
    }
}
