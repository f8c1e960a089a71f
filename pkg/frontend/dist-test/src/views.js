/**
 * Pure HTML renderers. No business logic lives here: verdict names,
 * resolved sets, statements and findings are printed exactly as the
 * server sent them.
 */
export function escapeHtml(text) {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;')
        .replace(/'/g, '&#39;');
}
export function verdictClass(verdict) {
    const known = ['permitted', 'prohibited', 'demanded', 'gray', 'recommended'];
    const kind = verdict.toLowerCase();
    return known.includes(kind) ? `verdict-${kind}` : 'verdict-unknown';
}
/** "Permitted or Prohibited" for placeholders, "settled" otherwise. */
export function resolvedText(leaf) {
    if (leaf.resolved.length > 1)
        return leaf.resolved.join(' or ');
    return 'settled';
}
export function renderTreePicker(trees) {
    const options = trees
        .map((tree) => `<option value="${escapeHtml(tree.id)}">` +
        `${escapeHtml(tree.name)} (${tree.leaf_count} practices)</option>`)
        .join('');
    return `
<div class="picker">
  <label for="tree-select">Knowledge base</label>
  <select id="tree-select">${options}</select>
  <label class="checkbox"><input type="checkbox" id="filter-literature" checked> literature</label>
  <label class="checkbox"><input type="checkbox" id="filter-standards" checked> standards</label>
  <button id="start-btn">Start walkthrough</button>
</div>`;
}
export function renderQuestion(question) {
    const branches = question.branches
        .map((branch) => `<button class="branch" data-branch="${branch.index}">` +
        `${escapeHtml(branch.answer)}</button>`)
        .join('\n    ');
    return `
<div class="card question-card">
  <h2>${escapeHtml(question.text)}</h2>
  <div class="branches">
    ${branches}
  </div>
</div>`;
}
export function renderVerdictCard(leaf) {
    const refs = leaf.refs.length
        ? `<p class="refs">refs: ${leaf.refs.map(escapeHtml).join('; ')}</p>`
        : '';
    return `
<div class="card verdict-card ${verdictClass(leaf.verdict)}">
  <span class="verdict-name">${escapeHtml(leaf.verdict)}</span>
  <span class="verdict-resolved">${escapeHtml(resolvedText(leaf))}</span>
  <p class="statement">${escapeHtml(leaf.statement)}</p>
  ${refs}
  <button id="record-btn">Record finding</button>
</div>`;
}
export function renderBreadcrumb(entries, canStepBack) {
    const crumbs = entries
        .map((entry) => `<li title="${escapeHtml(entry.question)}">${escapeHtml(entry.answer)}</li>`)
        .join('');
    const disabled = canStepBack ? '' : ' disabled';
    return `
<nav class="breadcrumb">
  <button id="back-btn"${disabled}>&#8592; back</button>
  <ol>${crumbs}</ol>
</nav>`;
}
export function renderFindings(findings) {
    const rows = findings
        .map((finding) => `<li class="${verdictClass(finding.verdict)}">` +
        `<span class="verdict-name">${escapeHtml(finding.verdict)}</span> ` +
        `${escapeHtml(finding.statement)}` +
        (finding.note ? ` <em>(${escapeHtml(finding.note)})</em>` : '') +
        `</li>`)
        .join('');
    return `
<section class="findings">
  <h3>Findings (${findings.length})</h3>
  <ul>${rows}</ul>
  <button id="export-btn">Export dataset</button>
</section>`;
}
export function renderNotice(message) {
    return message ? `<div class="notice">${escapeHtml(message)}</div>` : '';
}
