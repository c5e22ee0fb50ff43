use super::BettiTable;

/// Betti diagram in the usual layout:
///
/// ```text
///        0 1 2 3
/// total: 1 6 8 3
///     0: 1 . . .
///     1: . 6 8 3
/// ```
///
/// Columns are homological degrees `0..=pd`, rows are `j - i` from `0`
/// (or the lowest occupied row, if negative) up to the regularity. Cells
/// are right-aligned to the widest entry of their column; zeros print as
/// `.`.
pub(super) fn diagram(table: &BettiTable) -> String {
    let pd = table.pd();
    let low = table.entries().map(|(i, j, _)| j as i64 - i as i64).min().unwrap_or(0).min(0);
    let high = table.reg().max(low);
    let rows: Vec<i64> = (low..=high).collect();

    let cell = |i: usize, row: i64| -> String {
        let j = row + i as i64;
        if j < 0 {
            return ".".into();
        }
        match table.get(i, j as u64) {
            0 => ".".into(),
            c => c.to_string(),
        }
    };
    let header: Vec<String> = (0..=pd).map(|i| i.to_string()).collect();
    let totals: Vec<String> = (0..=pd).map(|i| table.total(i).to_string()).collect();
    let body: Vec<(String, Vec<String>)> = rows
        .iter()
        .map(|&r| (format!("{r}:"), (0..=pd).map(|i| cell(i, r)).collect()))
        .collect();

    let widths: Vec<usize> = (0..=pd)
        .map(|i| {
            body.iter()
                .map(|(_, cells)| cells[i].len())
                .chain([header[i].len(), totals[i].len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let label_width = body
        .iter()
        .map(|(l, _)| l.len())
        .chain(["total:".len()])
        .max()
        .unwrap_or(6);

    let mut out = String::new();
    let mut line = |label: &str, cells: &[String]| {
        out.push_str(&format!("{label:>label_width$}"));
        for (c, w) in cells.iter().zip(&widths) {
            out.push_str(&format!(" {c:>w$}"));
        }
        out.push('\n');
    };
    line("", &header);
    line("total:", &totals);
    for (label, cells) in &body {
        line(label, cells);
    }
    out
}
