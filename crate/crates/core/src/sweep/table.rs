use std::fmt::Write;

use clap::ValueEnum;

use crate::combinat::stirling_row;
use crate::identities::{conj_p, gen_binom_row};
use crate::partitions::enumerate;
use crate::polyalg::Canonical;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// `<λ, r>` for `1 ≤ r ≤ |λ| ≤ max`
    Genbinom,
    /// signed `s(n, k)` for `1 ≤ k ≤ n ≤ max`
    Stirling,
    /// `P_jk` for `1 ≤ k ≤ j ≤ max`
    Pjk,
}

fn aligned(rows: Vec<(String, Vec<String>)>) -> String {
    let label = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let cell = rows.iter().flat_map(|(_, v)| v.iter().map(String::len)).max().unwrap_or(0);
    let mut out = String::new();
    for (l, values) in rows {
        let cells: Vec<String> = values.iter().map(|v| format!("{v:>cell$}")).collect();
        let pad = label - l.chars().count();
        writeln!(out, "{l}{}  {}", " ".repeat(pad), cells.join(" ")).unwrap();
    }
    out
}

pub fn print_table(kind: TableKind, max: usize) -> String {
    match kind {
        TableKind::Stirling => aligned(
            (1..=max)
                .map(|n| (n.to_string(), stirling_row(n)[1..].iter().map(|v| v.to_string()).collect()))
                .collect(),
        ),
        TableKind::Genbinom => aligned(
            (1..=max)
                .flat_map(enumerate)
                .map(|mu| (mu.to_string(), gen_binom_row(&mu)[1..].iter().map(|v| v.to_string()).collect()))
                .collect(),
        ),
        TableKind::Pjk => {
            let mut out = String::new();
            for j in 1..=max {
                for k in 1..=j {
                    writeln!(out, "P[{j},{k}] = {}", conj_p(j, k).canonical()).unwrap();
                }
            }
            out
        }
    }
}
