use super::{SuiteReport, Verdict};

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Markdown table of a suite report, one row per result.
pub fn render_markdown(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str("| check | ring | verdict | detail |\n");
    out.push_str("|---|---|---|---|\n");
    for r in &report.results {
        let verdict = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT-APPLICABLE",
            Verdict::Vacuous => "VACUOUS",
        };
        let detail = r
            .witness
            .as_deref()
            .map(|w| format!("witness: {w}"))
            .or_else(|| r.note.clone())
            .unwrap_or_default();
        out.push_str(&format!(
            "| {} | `{}` | {} | {} |\n",
            r.check,
            cell(&r.ring),
            verdict,
            cell(&detail)
        ));
    }
    let s = &report.summary;
    out.push_str(&format!(
        "\n**{} rings**: {} pass, {} fail, {} not applicable, {} vacuous\n",
        report.corpus.len(),
        s.pass,
        s.fail,
        s.na,
        s.vacuous
    ));
    out
}
