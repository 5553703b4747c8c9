use std::fmt::Write as _;
use std::io::Write;

use gfft_core::algorithms::{Algorithm, FactoredTransform, Plan};
use gfft_core::binmat::BinaryMatrix;
use gfft_core::reference::ElementMatrix;
use gfft_core::structure::Coset;
use gfft_core::{Element, FieldContext};

use crate::opts::{FactorArgs, FactorFormat, UsageError};

pub const MIN_M: u32 = 2;
pub const MAX_M: u32 = 6;

/// A matrix of rendered cells with optional block boundaries.
struct Grid {
    cells: Vec<Vec<String>>,
    row_labels: Vec<String>,
    row_groups: Option<Vec<usize>>,
    col_groups: Option<Vec<usize>>,
}

fn element(ctx: &FieldContext, x: Element) -> String {
    match ctx.discrete_log(x) {
        Ok(k) => format!("a^{k}"),
        Err(_) => ".".into(),
    }
}

fn latex_element(ctx: &FieldContext, x: Element) -> String {
    match ctx.discrete_log(x) {
        Ok(0) => "1".into(),
        Ok(k) => format!("\\alpha^{{{k}}}"),
        Err(_) => "0".into(),
    }
}

fn bits(a: &BinaryMatrix) -> Vec<Vec<String>> {
    (0..a.rows()).map(|r| (0..a.cols()).map(|c| if a.get(r, c) { "1" } else { "0" }.to_string()).collect()).collect()
}

/// Boundaries after each group, as cumulative sizes.
fn boundaries(groups: &Option<Vec<usize>>) -> Vec<usize> {
    let mut out = Vec::new();
    let mut acc = 0;
    for g in groups.iter().flatten() {
        acc += g;
        out.push(acc);
    }
    out.pop();
    out
}

impl Grid {
    fn text(&self) -> String {
        let width = self.cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let label_width = self.row_labels.iter().map(String::len).max().unwrap_or(0);
        let col_cuts = boundaries(&self.col_groups);
        let row_cuts = boundaries(&self.row_groups);
        let render_row = |cells: &[String]| {
            let mut line = String::new();
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    line.push_str(if col_cuts.contains(&c) { " | " } else { " " });
                }
                let _ = write!(line, "{cell:<width$}");
            }
            line.trim_end().to_string()
        };
        let rule = {
            let blank: Vec<String> = (0..self.cells.first().map_or(0, Vec::len)).map(|_| "-".repeat(width)).collect();
            render_row(&blank).replace(" | ", "-+-").replace(' ', "-")
        };
        let mut s = String::new();
        for (r, row) in self.cells.iter().enumerate() {
            if row_cuts.contains(&r) {
                let _ = writeln!(s, "{:label_width$}{}{rule}", "", if label_width > 0 { "   " } else { "" });
            }
            if label_width > 0 {
                let _ = write!(s, "{:<label_width$} : ", self.row_labels[r]);
            }
            let _ = writeln!(s, "{}", render_row(row));
        }
        s
    }

    fn latex(&self, name: &str) -> String {
        let cols = self.cells.first().map_or(0, Vec::len);
        let col_cuts = boundaries(&self.col_groups);
        let row_cuts = boundaries(&self.row_groups);
        let spec: String = (0..cols).map(|c| if col_cuts.contains(&c) { "|c" } else { "c" }).collect();
        let mut s = format!("{name} = \\left(\\begin{{array}}{{{spec}}}\n");
        for (r, row) in self.cells.iter().enumerate() {
            if row_cuts.contains(&r) {
                s.push_str("\\hline\n");
            }
            let _ = writeln!(s, "{} \\\\", row.join(" & "));
        }
        s.push_str("\\end{array}\\right)\n");
        s
    }
}

fn sizes(cosets: &[Coset]) -> Vec<usize> {
    cosets.iter().map(Coset::len).collect()
}

fn block_diagonal(
    ctx: &FieldContext,
    blocks: &[ElementMatrix],
    render: impl Fn(&FieldContext, Element) -> String,
) -> Vec<Vec<String>> {
    let n: usize = blocks.iter().map(ElementMatrix::rows).sum();
    let zero = render(ctx, Element::ZERO);
    let mut cells = vec![vec![zero; n]; n];
    let mut off = 0;
    for b in blocks {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                cells[off + r][off + c] = render(ctx, b.get(r, c));
            }
        }
        off += b.rows();
    }
    cells
}

fn ordering(prefix: &str, perm: &[usize], cosets: &[Coset], latex: bool) -> String {
    let cuts = boundaries(&Some(sizes(cosets)));
    let mut s = String::new();
    for (p, &i) in perm.iter().enumerate() {
        if p > 0 {
            s.push_str(if cuts.contains(&p) { " | " } else { " " });
        }
        if latex {
            let _ = write!(s, "{prefix}_{{{i}}}");
        } else {
            let _ = write!(s, "{prefix}{i}");
        }
    }
    s
}

fn coset_line(cosets: &[Coset]) -> String {
    cosets
        .iter()
        .map(|c| {
            let e: Vec<String> = c.elements().iter().map(usize::to_string).collect();
            format!("{{{}}}", e.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

struct Display {
    cosets: Vec<Coset>,
    in_perm: Vec<usize>,
    out_perm: Vec<usize>,
    /// Name and description of the binary matrix, then of the field matrix.
    binary: (&'static str, Grid),
    field: (&'static str, Vec<ElementMatrix>),
    field_row_labels: Vec<String>,
    extra: Vec<String>,
}

fn factored_display(p: &FactoredTransform, binary_name: &'static str, field_name: &'static str) -> Display {
    let cosets = p.cosets().to_vec();
    let row_groups = p.grouped_output().then(|| sizes(&cosets));
    let binary = Grid {
        cells: bits(p.binary()),
        row_labels: p.out_perm().iter().map(|i| format!("F{i}")).collect(),
        row_groups,
        col_groups: Some(sizes(&cosets)),
    };
    Display {
        in_perm: p.in_perm().to_vec(),
        out_perm: p.out_perm().to_vec(),
        binary: (binary_name, binary),
        field: (field_name, p.blocks().iter().map(|b| b.to_matrix()).collect()),
        field_row_labels: Vec::new(),
        extra: Vec::new(),
        cosets,
    }
}

fn display(plan: &Plan) -> Display {
    match plan {
        Plan::Goertzel(g) => {
            let cosets = g.cosets().to_vec();
            let mut labels = Vec::new();
            for (k, c) in cosets.iter().enumerate() {
                labels.extend((0..c.len()).map(|t| format!("r{t},{k}")));
            }
            let polys: Vec<String> =
                g.minimal_polynomials().iter().enumerate().map(|(k, p)| format!("M{k} = {p:#x}")).collect();
            let binary = Grid {
                cells: bits(g.remainder_matrix()),
                row_labels: labels,
                row_groups: Some(sizes(&cosets)),
                col_groups: None,
            };
            Display {
                in_perm: (0..g.ctx().n()).collect(),
                out_perm: g.out_perm().to_vec(),
                binary: ("R", binary),
                field: ("V", g.eval_blocks().to_vec()),
                field_row_labels: g.out_perm().iter().map(|i| format!("F{i}")).collect(),
                extra: vec![format!("minimal polynomials: {}", polys.join(", "))],
                cosets,
            }
        }
        Plan::Blahut(b) => factored_display(b.factored(), "B", "V"),
        Plan::Factored(p) => factored_display(p, "A_e", "D_e"),
    }
}

pub fn render_text(plan: &Plan) -> String {
    let ctx = plan.ctx();
    let d = display(plan);
    let mut s = String::new();
    let _ = writeln!(s, "# gfft factor {}: m = {}, n = {}, poly {:#x}", plan.algorithm(), ctx.m(), ctx.n(), ctx.spec().poly());
    let _ = writeln!(s, "cosets: {}", coset_line(&d.cosets));
    for line in &d.extra {
        let _ = writeln!(s, "{line}");
    }
    let in_grouped = !matches!(plan.algorithm(), Algorithm::Goertzel);
    let in_line = if in_grouped {
        ordering("f", &d.in_perm, &d.cosets, false)
    } else {
        d.in_perm.iter().map(|i| format!("f{i}")).collect::<Vec<_>>().join(" ")
    };
    let out_grouped = d.out_perm.iter().enumerate().any(|(p, &i)| p != i);
    let out_line = if out_grouped {
        ordering("F", &d.out_perm, &d.cosets, false)
    } else {
        d.out_perm.iter().map(|i| format!("F{i}")).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(s, "in_perm:  {in_line}");
    let _ = writeln!(s, "out_perm: {out_line}");
    let _ = writeln!(s);
    let _ = writeln!(s, "{}:", d.binary.0);
    s.push_str(&d.binary.1.text());
    let _ = writeln!(s);
    let _ = writeln!(s, "{}:", d.field.0);
    let field = Grid {
        cells: block_diagonal(ctx, &d.field.1, element),
        row_labels: d.field_row_labels,
        row_groups: Some(sizes(&d.cosets)),
        col_groups: Some(sizes(&d.cosets)),
    };
    s.push_str(&field.text());
    s
}

pub fn render_latex(plan: &Plan) -> String {
    let ctx = plan.ctx();
    let d = display(plan);
    let mut s = String::new();
    let _ = writeln!(s, "% gfft factor {}: m = {}, n = {}, poly {:#x}", plan.algorithm(), ctx.m(), ctx.n(), ctx.spec().poly());
    let _ = writeln!(s, "% in: {}", ordering("f", &d.in_perm, &d.cosets, true));
    let _ = writeln!(s, "% out: {}", ordering("F", &d.out_perm, &d.cosets, true));
    s.push_str("\\[\n");
    s.push_str(&d.binary.1.latex(d.binary.0));
    s.push_str("\\]\n\\[\n");
    let field = Grid {
        cells: block_diagonal(ctx, &d.field.1, latex_element),
        row_labels: Vec::new(),
        row_groups: Some(sizes(&d.cosets)),
        col_groups: Some(sizes(&d.cosets)),
    };
    s.push_str(&field.latex(d.field.0));
    s.push_str("\\]\n");
    s
}

pub fn run(args: &FactorArgs, out: &mut dyn Write) -> Result<(), UsageError> {
    let contexts = args.common.contexts(MIN_M, MAX_M, "factor")?;
    let mut first = true;
    for ctx in &contexts {
        for &a in &args.common.algo.0 {
            let plan = Plan::build(a, ctx).map_err(|e| UsageError(e.to_string()))?;
            let text = match args.format {
                FactorFormat::Text => render_text(&plan),
                FactorFormat::Latex => render_latex(&plan),
            };
            let sep = if first { "" } else { "\n" };
            first = false;
            write!(out, "{sep}{text}").map_err(|e| UsageError(format!("writing output: {e}")))?;
        }
    }
    Ok(())
}
