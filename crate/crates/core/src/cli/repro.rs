//! Golden tables of worked examples, recomputed and diffed.
//!
//! Every row pairs a stored value with the value computed by the library.
//! Where the printed source value is a misprint, the stored value is the
//! corrected one and the row carries a note.

use std::fmt;

use serde_json::{json, Value};

use crate::lab::cohn_matrix;
use crate::poly::LaurentPoly;
use crate::qarith::{eval_cf_q, negative_cf, q_int, q_rational, regular_cf, CFWord, CanonicalQRational};
use crate::qquadratic::{q_quadratic, QSurd, Surd};

/// One compared value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
    pub note: Option<String>,
}

impl Row {
    fn new(label: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display, ok: bool) -> Row {
        Row {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            ok,
            note: None,
        }
    }

    fn poly(label: impl Into<String>, expected: &LaurentPoly, computed: &LaurentPoly) -> Row {
        Row::new(label, format!("{expected:#}"), format!("{computed:#}"), expected == computed)
    }

    fn note(mut self, note: &str) -> Row {
        self.note = Some(note.to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "expected": self.expected,
            "computed": self.computed,
            "match": self.ok,
            "note": self.note,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub id: &'static str,
    pub title: &'static str,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "table": self.id,
            "title": self.title,
            "rows": self.rows.iter().map(Row::to_json).collect::<Vec<_>>(),
            "match": self.all_match(),
        })
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} ({})", self.title, self.id)?;
        for r in &self.rows {
            let mark = if r.ok { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", r.label, r.computed)?;
            if !r.ok {
                writeln!(f, "     expected: {}", r.expected)?;
            }
            if let Some(n) = &r.note {
                writeln!(f, "     note: {n}")?;
            }
        }
        let n_ok = self.rows.iter().filter(|r| r.ok).count();
        writeln!(f, "{n_ok}/{} rows match", self.rows.len())
    }
}

/// `(id, title)` of every registered table.
pub const TABLES: [(&str, &str); 6] = [
    ("qrationals", "q-rationals and their continued fractions"),
    ("series", "Taylor series of rational approximations of 1+sqrt(2)"),
    ("cohn", "Cohn matrices"),
    ("quadratic", "closed forms of period-one quadratic irrationals"),
    ("period2", "radicands of period-two quadratic irrationals"),
    ("sqrt", "radicands of square roots"),
];

/// Recomputes the table `id`, or `None` for an unknown id.
pub fn reproduce(id: &str) -> Option<Table> {
    let (id, title) = *TABLES.iter().find(|(t, _)| *t == id)?;
    let rows = match id {
        "qrationals" => qrationals(),
        "series" => series(),
        "cohn" => cohn(),
        "quadratic" => quadratic(),
        "period2" => period2(),
        "sqrt" => sqrt(),
        _ => unreachable!(),
    };
    Some(Table { id, title, rows })
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap_or_else(|e| panic!("bad golden polynomial {s:?}: {e}"))
}

fn prod(factors: &[&str]) -> LaurentPoly {
    factors.iter().fold(LaurentPoly::one(), |acc, f| &acc * &p(f))
}

fn computed<T: fmt::Display, E: fmt::Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

struct QRatRow {
    r: i64,
    s: i64,
    regular: &'static str,
    negative: &'static str,
    sign: i8,
    exponent: i64,
    num: &'static str,
    den: &'static str,
    note: Option<&'static str>,
}

const QRATIONALS: [QRatRow; 6] = [
    QRatRow { r: -5, s: 3, regular: "[-2,3]", negative: "[[-1,2,2]]", sign: -1, exponent: -2, num: "1+2q+q^2+q^3", den: "1+q+q^2", note: None },
    QRatRow { r: -1, s: 4, regular: "[-1,1,3]", negative: "[[0,4]]", sign: -1, exponent: -1, num: "1", den: "1+q+q^2+q^3", note: None },
    QRatRow { r: 5, s: 12, regular: "[0,2,2,2]", negative: "[[1,2,4,2]]", sign: 1, exponent: 2, num: "1+2q+q^2+q^3", den: "1+2q+3q^2+3q^3+2q^4+q^5", note: Some("printed with the negative expansion of 3/5, [[1,3,2]]") },
    QRatRow { r: 3, s: 5, regular: "[0,1,1,2]", negative: "[[1,3,2]]", sign: 1, exponent: 1, num: "1+q+q^2", den: "1+2q+q^2+q^3", note: Some("printed with the negative expansion of 5/12, [[1,2,4,2]]") },
    QRatRow { r: 5, s: 3, regular: "[1,1,1,1]", negative: "[[2,3]]", sign: 1, exponent: 0, num: "1+q+2q^2+q^3", den: "1+q+q^2", note: None },
    QRatRow { r: 12, s: 5, regular: "[2,2,1,1]", negative: "[[3,2,3]]", sign: 1, exponent: 0, num: "1+2q+3q^2+3q^3+2q^4+q^5", den: "1+q+2q^2+q^3", note: None },
];

/// `[a_1, ..., a_n + 1]` becomes `[a_1, ..., a_n, 1]` so that the word has
/// even length.
fn even_regular(w: &CFWord) -> CFWord {
    let mut c = w.coeffs.clone();
    if c.len() % 2 == 1 {
        let last = c.pop().expect("nonempty word");
        c.extend([last - 1, 1]);
    }
    CFWord::regular(c)
}

fn qrationals() -> Vec<Row> {
    let mut rows = Vec::new();
    for g in &QRATIONALS {
        let expected = CanonicalQRational {
            sign: g.sign,
            exponent: g.exponent,
            r: p(g.num),
            s: p(g.den),
        };
        let name = format!("[{}/{}]", g.r, g.s);
        let value = q_rational(g.r, g.s);
        rows.push(Row::new(
            format!("{name}_q"),
            &expected,
            computed(&value),
            value.as_ref().ok() == Some(&expected),
        ));
        let reg: CFWord = g.regular.parse().expect("golden word");
        let reg_even = even_regular(&reg);
        let got = regular_cf(g.r, g.s);
        let mut row = Row::new(
            format!("{name} regular"),
            &reg_even,
            computed(&got),
            got.as_ref().ok() == Some(&reg_even),
        );
        if reg_even != reg {
            row = row.note(&format!("printed as the odd-length word {reg}"));
        }
        rows.push(row);
        let neg: CFWord = g.negative.parse().expect("golden word");
        let got = negative_cf(g.r, g.s);
        let mut row = Row::new(
            format!("{name} negative"),
            &neg,
            computed(&got),
            got.as_ref().ok() == Some(&neg),
        );
        if let Some(n) = g.note {
            row = row.note(n);
        }
        rows.push(row);
        for w in [reg_even, neg] {
            let v = eval_cf_q(&w).map(|(u, f)| CanonicalQRational::from_parts(u, f));
            rows.push(Row::new(
                format!("{w}_q"),
                &expected,
                computed(&v),
                v.as_ref().ok() == Some(&expected),
            ));
        }
    }
    rows
}

fn series() -> Vec<Row> {
    let common = "1+q+q^4-2q^6+q^7";
    let golden = [
        (12, 5, 12, "+3q^8-3q^9-4q^10+7q^11+4q^12"),
        (241, 100, 13, "+3q^8-2q^9-7q^10+9q^11+7q^12-17q^13"),
        (408, 169, 16, "+4q^8-5q^9-7q^10+18q^11+7q^12-55q^13+18q^14+146q^15-156q^16"),
    ];
    let mut rows = Vec::new();
    for (r, s, order, tail) in golden {
        let expected = p(&format!("{common}{tail}"));
        let label = format!("[{r}/{s}]_q through q^{order}");
        match q_rational(r, s).map(|x| x.series(order)) {
            Ok(Ok(f)) => rows.push(Row::poly(label, &expected, f.truncated())),
            Ok(Err(e)) => rows.push(Row::new(label, format!("{expected:#}"), format!("error: {e}"), false)),
            Err(e) => rows.push(Row::new(label, format!("{expected:#}"), format!("error: {e}"), false)),
        }
    }
    let expected = p(&format!("{common}+4q^8-5q^9-7q^10+18q^11+7q^12-55q^13+18q^14+146q^15-155q^16"));
    let label = "[1+sqrt(2)]_q through q^16";
    let x: Surd = "1+sqrt(2)".parse().expect("golden surd");
    let row = match q_quadratic(&x).and_then(|y| Ok(y.series(16)?)) {
        Ok(f) => Row::poly(label, &expected, f.truncated()),
        Err(e) => Row::new(label, format!("{expected:#}"), format!("error: {e}"), false),
    };
    rows.push(row.note("printed as +146q^15-155q^15; the second term is -155q^16, so it agrees with [408/169]_q through q^15 only"));
    rows
}

struct CohnRow {
    word: &'static str,
    entries: [&'static str; 4],
    trace: &'static [&'static str],
}

const COHN: [CohnRow; 6] = [
    CohnRow { word: "A", entries: ["q+q^2", "1", "q", "1"], trace: &["1+q+q^2"] },
    CohnRow { word: "B", entries: ["q+2q^2+q^3+q^4", "1+q", "q+q^2", "1"], trace: &["1+q+q^2", "1+q^2"] },
    CohnRow {
        word: "AB",
        entries: ["q+2q^2+3q^3+3q^4+2q^5+q^6", "1+q+2q^2+q^3", "q+2q^2+2q^3+q^4+q^5", "1+q+q^2"],
        trace: &["1+q+q^2", "1+q+q^2+q^3+q^4"],
    },
    CohnRow {
        word: "A^2B",
        entries: [
            "q+3q^2+5q^3+6q^4+7q^5+5q^6+3q^7+q^8",
            "1+2q+3q^2+3q^3+3q^4+q^5",
            "q+3q^2+4q^3+4q^4+4q^5+2q^6+q^7",
            "1+2q+2q^2+2q^3+q^4",
        ],
        trace: &["1+q+q^2", "1+2q+2q^2+3q^3+2q^4+2q^5+q^6"],
    },
    CohnRow {
        word: "AB^2",
        entries: [
            "q+3q^2+7q^3+11q^4+13q^5+13q^6+11q^7+7q^8+3q^9+q^10",
            "1+2q+5q^2+6q^3+6q^4+5q^5+3q^6+q^7",
            "q+3q^2+6q^3+8q^4+8q^5+7q^6+5q^7+2q^8+q^9",
            "1+2q+4q^2+4q^3+3q^4+2q^5+q^6",
        ],
        trace: &["1+q+q^2", "1+2q+4q^2+5q^3+5q^4+5q^5+4q^6+2q^7+q^8"],
    },
    CohnRow {
        word: "A^3B",
        entries: [
            "q+4q^2+8q^3+12q^4+15q^5+15q^6+13q^7+8q^8+4q^9+q^10",
            "1+3q+5q^2+7q^3+7q^4+6q^5+4q^6+q^7",
            "q+4q^2+7q^3+9q^4+10q^5+9q^6+6q^7+3q^8+q^9",
            "1+3q+4q^2+5q^3+4q^4+3q^5+q^6",
        ],
        trace: &["1+q+q^2", "1+q^2", "1+3q+3q^2+3q^3+3q^4+3q^5+q^6"],
    },
];

/// Printed values that are impossible: at q = 1 they contradict the
/// classical product `A^2 B = [[31, 13], [19, 8]]`.
const COHN_MISPRINTS: [(&str, &str); 2] = [
    ("[A^2B]_q entry d", "printed as 1+q+2q^2+2q^3+q^4, which is 7 at q = 1 instead of 8"),
    ("Tr [A^2B]_q", "printed as (1+q+q^2)(1+2q+2q^2+3q^3+3q^4+2q^5+q^6), which is 42 at q = 1 instead of 39"),
];

fn cohn() -> Vec<Row> {
    let mut rows = Vec::new();
    let three = q_int(3);
    for g in &COHN {
        let m = match cohn_matrix(g.word) {
            Ok(m) => m,
            Err(e) => {
                rows.push(Row::new(format!("[{}]_q", g.word), "matrix", format!("error: {e}"), false));
                continue;
            }
        };
        for (name, (e, c)) in ["a", "b", "c", "d"].iter().zip(g.entries.iter().zip(m.entries())) {
            rows.push(Row::poly(format!("[{}]_q entry {name}", g.word), &p(e), c));
        }
        let tr = m.trace();
        rows.push(Row::poly(format!("Tr [{}]_q", g.word), &prod(g.trace), &tr));
        let q = tr.exact_divide(&three).expect("nonzero divisor");
        let nonneg = q.as_ref().is_some_and(LaurentPoly::has_nonneg_coeffs);
        let shown = q.map_or("not divisible".to_string(), |q| format!("{q:#}"));
        rows.push(Row::new(
            format!("Tr [{}]_q / [3]_q", g.word),
            "divisible, nonnegative quotient",
            shown,
            nonneg,
        ));
    }
    for row in &mut rows {
        if let Some((_, n)) = COHN_MISPRINTS.iter().find(|(l, _)| *l == row.label) {
            row.note = Some(n.to_string());
        }
    }
    rows
}

fn surd_row(label: &str, x: &str, r: &str, p_factors: &[&str], s: &str) -> Row {
    let expected = QSurd {
        r: p(r),
        p: prod(p_factors),
        s: p(s),
        branch: 1,
    };
    let x: Surd = x.parse().expect("golden surd");
    let got = q_quadratic(&x);
    let ok = got.as_ref().ok() == Some(&expected);
    Row::new(label, &expected, computed(&got), ok)
}

fn factor_row(label: &str, x: &str, factor: &str, cofactor: &str) -> Row {
    let label = format!("{label} radicand / ({factor})");
    let x: Surd = x.parse().expect("golden surd");
    match q_quadratic(&x) {
        Ok(y) => match y.p.exact_divide(&p(factor)).expect("nonzero divisor") {
            Some(q) => Row::poly(label, &p(cofactor), &q),
            None => Row::new(label, cofactor, "not divisible", false),
        },
        Err(e) => Row::new(label, cofactor, format!("error: {e}"), false),
    }
}

const PHI: &str = "1-q+q^2";

fn quadratic() -> Vec<Row> {
    let forms = [
        ("[[3,3,...]]", "(3+sqrt(5))/2", "1+q+q^2", "1+3q+q^2", "2"),
        ("[1,1,...]", "(1+sqrt(5))/2", "q^2+q-1", "1+3q+q^2", "2q"),
        ("[2,2,...]", "1+sqrt(2)", "q^3+2q-1", "1+q+4q^2+q^3+q^4", "2q"),
        ("[3,3,...]", "(3+sqrt(13))/2", "q^4+q^2+2q-1", "1+q+2q^2+5q^3+2q^4+q^5+q^6", "2q"),
        ("[4,4,...]", "2+sqrt(5)", "q^5+q^3+q^2+2q-1", "1+q+2q^2+3q^3+6q^4+3q^5+2q^6+q^7+q^8", "2q"),
    ];
    let mut rows = Vec::new();
    for (cf, x, r, cofactor, s) in forms {
        rows.push(surd_row(&format!("[{x}]_q = {cf}_q"), x, r, &[PHI, cofactor], s));
        rows.push(factor_row(&format!("[{x}]_q"), x, PHI, cofactor));
    }
    rows
}

fn period2() -> Vec<Row> {
    // (a, b, printed radicand, printed factors)
    let golden: [(i64, i64, &str, &[&str]); 12] = [
        (1, 2, "q^6+2q^5+3q^4+3q^2+2q+1", &[]),
        (1, 3, "q^8+2q^7+3q^6+4q^5+q^4+4q^3+3q^2+2q+1", &["q^4+q^3+3q^2+q+1", "q^4+q^3-q^2+q+1"]),
        (1, 4, "q^10+2q^9+3q^8+4q^7+5q^6+2q^5+5q^4+4q^3+3q^2+2q+1", &[]),
        (
            1,
            5,
            "q^12+2q^11+3q^10+4q^9+5q^8+6q^7+3q^6+6q^5+5q^4+4q^3+3q^2+2q+1",
            &["q^6+q^5+q^4+3q^3+q^2+q+1", "q^6+q^5+q^4-q^3+q^2+q+1"],
        ),
        (2, 1, "q^6+2q^5+3q^4+3q^2+2q+1", &[]),
        (2, 3, "q^10+2q^9+5q^8+8q^7+10q^6+8q^5+10q^4+8q^3+5q^2+2q+1", &[]),
        (2, 4, "q^10+4q^8+8q^6-2q^5+8q^4+4q^2+1", &["q^4-q^3+3q^2-q+1", "q^6+q^5+2q^4+2q^2+q+1"]),
        (2, 5, "q^14+2q^13+5q^12+8q^11+12q^10+16q^9+18q^8+16q^7+18q^6+16q^5+12q^4+8q^3+5q^2+2q+1", &[]),
        (3, 1, "q^8+2q^7+3q^6+4q^5+q^4+4q^3+3q^2+2q+1", &["q^4+q^3-q^2+q+1", "q^4+q^3+3q^2+q+1"]),
        (3, 2, "q^10+2q^9+5q^8+8q^7+10q^6+8q^5+10q^4+8q^3+5q^2+2q+1", &[]),
        (3, 4, "q^14+2q^13+5q^12+10q^11+16q^10+22q^9+27q^8+26q^7+27q^6+22q^5+16q^4+10q^3+5q^2+2q+1", &[]),
        (
            3,
            5,
            "q^16+2q^15+5q^14+10q^13+16q^12+24q^11+31q^10+36q^9+35q^8+36q^7+31q^6+24q^5+16q^4+10q^3+5q^2+2q+1",
            &["q^8+q^7+2q^6+3q^5+q^4+3q^3+2q^2+q+1", "q^8+q^7+2q^6+3q^5+5q^4+3q^3+2q^2+q+1"],
        ),
    ];
    let mut rows = Vec::new();
    for (a, b, radicand, factors) in golden {
        // [a, b, a, b, ...] = (ab + sqrt((ab)^2 + 4ab)) / 2b
        let x = match Surd::new(a * b, 1, (a * b) * (a * b) + 4 * a * b, 2 * b) {
            Ok(x) => x,
            Err(e) => {
                rows.push(Row::new(format!("[{a},{b},...]"), radicand, format!("error: {e}"), false));
                continue;
            }
        };
        let label = format!("[{a},{b},...] = {x}");
        let expected = p(radicand);
        let row = match q_quadratic(&x) {
            Ok(y) => Row::poly(&label, &expected, &y.p),
            Err(e) => Row::new(&label, format!("{expected:#}"), format!("error: {e}"), false),
        };
        rows.push(if (a, b) == (1, 3) {
            row.note("printed without the 4q^3 term; the printed factorization and the mirror case a=3, b=1 include it")
        } else {
            row
        });
        if !factors.is_empty() {
            rows.push(Row::poly(format!("[{a},{b},...] factorization"), &expected, &prod(factors)));
        }
    }
    rows
}

fn sqrt() -> Vec<Row> {
    let golden: [(i64, &str, Option<&str>); 8] = [
        (2, "q^6+4q^4-2q^3+4q^2+1", Some("q^4+q^3+4q^2+q+1")),
        (3, "q^6+2q^5+3q^4+3q^2+2q+1", None),
        (5, "q^10+2q^8+2q^7+5q^6+5q^4+2q^3+2q^2+1", Some("q^8+q^7+2q^6+3q^5+6q^4+3q^3+2q^2+q+1")),
        (6, "q^10+4q^8+8q^6-2q^5+8q^4+4q^2+1", None),
        (7, "q^10+2q^9+q^8+4q^7+6q^6+6q^4+4q^3+q^2+2q+1", None),
        (8, "q^10+2q^9+3q^8+4q^7+5q^6+2q^5+5q^4+4q^3+3q^2+2q+1", None),
        (
            10,
            "q^14+2q^12+2q^11+3q^10+4q^9+7q^8+2q^7+7q^6+4q^5+3q^4+2q^3+2q^2+1",
            Some("q^12+q^11+2q^10+3q^9+4q^8+5q^7+8q^6+5q^5+4q^4+3q^3+2q^2+q+1"),
        ),
        (11, "q^14+2q^12+4q^11+q^10+6q^9+8q^8+8q^6+6q^5+q^4+4q^3+2q^2+1", None),
    ];
    let mut rows = Vec::new();
    for (n, radicand, cofactor) in golden {
        let x = format!("sqrt({n})");
        let expected = p(radicand);
        let label = format!("[{x}]_q radicand");
        let row = match Surd::sqrt(n).and_then(|s| q_quadratic(&s)) {
            Ok(y) => Row::poly(&label, &expected, &y.p),
            Err(e) => Row::new(&label, format!("{expected:#}"), format!("error: {e}"), false),
        };
        rows.push(if n == 10 {
            row.note("the q^7 coefficient is printed as *; 2 is the value computed here and equals the q^7 coefficient of the printed factorization")
        } else {
            row
        });
        if let Some(c) = cofactor {
            rows.push(factor_row(&format!("[{x}]_q"), &x, PHI, c));
        }
    }
    rows.push(factor_row("[sqrt(6)]_q", "sqrt(6)", "q^4-q^3+3q^2-q+1", "q^6+q^5+2q^4+2q^2+q+1"));
    rows
}
