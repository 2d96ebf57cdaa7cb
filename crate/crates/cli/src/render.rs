//! Text and LaTeX layouts of a table: rows are the left factor, columns the
//! right factor, empty cells mean a zero product.

use gtable_core::exactla::Scalar;
use gtable_core::gtable::{Entry, GTable};
use gtable_core::repkit::Labeling;

/// Whether the intertwiner index should be shown for an entry.
fn needs_q(t: &GTable, r1: usize, r2: usize, e: &Entry) -> bool {
    let Some(lab) = Labeling::by_name(t.labeling()) else {
        return e.q > 1;
    };
    let src = t.summands();
    lab.multiplicity(src[r1].irrep, src[r2].irrep, t.targets()[e.s].irrep) > 1
}

fn text_term(c: &Scalar, first: bool) -> (String, String) {
    let sign = match (c.is_negative(), first) {
        (true, true) => "-",
        (true, false) => " - ",
        (false, true) => "",
        (false, false) => " + ",
    };
    let abs = c.abs();
    let coef = if abs.is_one() { String::new() } else { format!("{abs} ") };
    (sign.to_string(), coef)
}

fn text_cell(t: &GTable, r1: usize, r2: usize) -> String {
    let mut s = String::new();
    for (k, e) in t.cell(r1, r2).iter().enumerate() {
        let (sign, coef) = text_term(&e.c, k == 0);
        s.push_str(&sign);
        s.push_str(&coef);
        s.push_str(&t.targets()[e.s].id);
        if needs_q(t, r1, r2, e) {
            s.push_str(&format!("[{}]", e.q));
        }
    }
    s
}

/// A plain-text grid; `[q]` marks the intertwiner when a triple has more
/// than one.
pub fn render_text(t: &GTable) -> String {
    let ids: Vec<&str> = t.summands().iter().map(|s| s.id.as_str()).collect();
    let n = ids.len();
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![String::new()];
    header.extend(ids.iter().map(|s| s.to_string()));
    grid.push(header);
    for (r1, id) in ids.iter().enumerate() {
        let mut row = vec![id.to_string()];
        row.extend((0..n).map(|r2| text_cell(t, r1, r2)));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|j| grid.iter().map(|row| row[j].chars().count()).max().unwrap_or(0))
        .collect();
    let line = |row: &[String]| -> String {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let mut s = cells[0].clone();
        for c in &cells[1..] {
            s.push_str(" | ");
            s.push_str(c);
        }
        s.trim_end().to_string()
    };
    let mut out = format!("{} table ({})\n", t.group().name(), t.labeling());
    out.push_str(&line(&grid[0]));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in &grid[1..] {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn latex_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_base(base: &str) -> Option<String> {
    let letters: String = base
        .chars()
        .take_while(|c| c.is_ascii_alphabetic() || "()".contains(*c))
        .collect();
    let rest = &base[letters.len()..];
    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
    let rest = &rest[digits.len()..];
    let primes: String = rest.chars().take_while(|&c| c == '\'').collect();
    let rest = &rest[primes.len()..];
    let sup = match rest {
        "" => String::new(),
        r => {
            let pair = r.strip_prefix('^')?;
            let ds: Vec<char> = pair.chars().collect();
            if ds.len() != 2 || !ds.iter().all(char::is_ascii_digit) {
                return None;
            }
            format!("^{{{},{}}}", ds[0], ds[1])
        }
    };
    let head = match letters.as_str() {
        "sl" => "\\mathfrak{sl}".to_string(),
        "" => String::new(),
        l => l.to_string(),
    };
    let sub = if digits.is_empty() {
        String::new()
    } else if head.is_empty() {
        digits
    } else {
        format!("_{{{digits}}}")
    };
    Some(format!("{head}{sub}{primes}{sup}"))
}

/// `H0^22 ↦ H_{0}^{2,2}`, `V1'_ab ↦ {V_{1}'}_{ab}`; anything else goes
/// through `\mathrm` with special characters escaped.
pub fn latex_id(id: &str) -> String {
    let (base, sub) = match id.split_once('_') {
        Some((b, s)) if s.chars().all(|c| c.is_ascii_alphanumeric()) => (b, Some(s)),
        Some(_) => ("", None),
        None => (id, None),
    };
    match (latex_base(base), sub) {
        (Some(b), None) if !b.is_empty() => b,
        (Some(b), Some(s)) => format!("{{{b}}}_{{{s}}}"),
        _ => {
            let escaped: String = id
                .chars()
                .flat_map(|c| match c {
                    '_' | '#' | '^' | '&' | '%' | '$' => vec!['\\', c],
                    c => vec![c],
                })
                .collect();
            format!("\\mathrm{{{escaped}}}")
        }
    }
}

fn latex_cell(t: &GTable, r1: usize, r2: usize) -> String {
    let mut s = String::new();
    for (k, e) in t.cell(r1, r2).iter().enumerate() {
        let neg = e.c.is_negative();
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let abs = e.c.abs();
        if !abs.is_one() {
            s.push_str(&latex_scalar(&abs));
            s.push_str("\\,");
        }
        s.push_str(&latex_id(&t.targets()[e.s].id));
        if needs_q(t, r1, r2, e) {
            s.push_str(&format!("^{{({})}}", e.q));
        }
    }
    if s.is_empty() {
        s
    } else {
        format!("${s}$")
    }
}

/// A `tabular` with a double rule under the header, as in printed tables.
pub fn render_latex(t: &GTable) -> String {
    let n = t.summands().len();
    let ids: Vec<String> = t.summands().iter().map(|s| format!("${}$", latex_id(&s.id))).collect();
    let mut out = format!("\\begin{{tabular}}{{|c||{}}}\n\\hline\n", "c|".repeat(n));
    out.push_str(&format!(" & {} \\\\\n\\hline\n\\hline\n", ids.join(" & ")));
    for (r1, id) in ids.iter().enumerate() {
        let cells: Vec<String> = (0..n).map(|r2| latex_cell(t, r1, r2)).collect();
        out.push_str(&format!("{id} & {} \\\\\n\\hline\n", cells.join(" & ")));
    }
    out.push_str("\\end{tabular}\n");
    out
}
