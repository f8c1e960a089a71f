import assert from 'node:assert/strict';
import test from 'node:test';
import { escapeHtml, renderBreadcrumb, renderFindings, renderQuestion, renderTreePicker, renderVerdictCard, resolvedText, verdictClass, } from '../src/views.js';
const GRAY_LEAF = {
    leaf_id: 'M1',
    verdict: 'Gray',
    resolved: ['Permitted', 'Prohibited'],
    statement: 'Collecting MAC addresses of devices is a Gray action',
    refs: ['practice-survey/device-identifiers'],
};
test('verdict card shows the verdict, its resolution and the statement', () => {
    const html = renderVerdictCard(GRAY_LEAF);
    assert.match(html, /verdict-gray/);
    assert.match(html, /Gray/);
    assert.match(html, /Permitted or Prohibited/);
    assert.match(html, /Collecting MAC addresses of devices is a Gray action/);
    assert.match(html, /id="record-btn"/);
});
test('settled verdicts do not pretend to resolve further', () => {
    const leaf = { ...GRAY_LEAF, verdict: 'Demanded', resolved: ['Demanded'] };
    assert.equal(resolvedText(leaf), 'settled');
});
test('one css class per verdict kind', () => {
    assert.equal(verdictClass('Permitted'), 'verdict-permitted');
    assert.equal(verdictClass('Prohibited'), 'verdict-prohibited');
    assert.equal(verdictClass('Demanded'), 'verdict-demanded');
    assert.equal(verdictClass('Gray'), 'verdict-gray');
    assert.equal(verdictClass('Recommended'), 'verdict-recommended');
    assert.equal(verdictClass('???'), 'verdict-unknown');
});
test('html in server text is escaped, not interpreted', () => {
    assert.equal(escapeHtml('<script>"&\''), '&lt;script&gt;&quot;&amp;&#39;');
    const html = renderQuestion({
        node_id: 'N1',
        text: 'Is <b>bold</b> ok?',
        branches: [{ index: 0, answer: 'a & b' }],
    });
    assert.match(html, /Is &lt;b&gt;bold&lt;\/b&gt; ok\?/);
    assert.match(html, /a &amp; b/);
});
test('question card renders one button per branch with its index', () => {
    const html = renderQuestion({
        node_id: 'N1',
        text: 'which?',
        branches: [
            { index: 0, answer: 'first' },
            { index: 1, answer: 'second' },
        ],
    });
    assert.match(html, /data-branch="0"/);
    assert.match(html, /data-branch="1"/);
});
test('back control is disabled at the root', () => {
    assert.match(renderBreadcrumb([], false), /id="back-btn" disabled/);
    const active = renderBreadcrumb([{ question: 'q', answer: 'chose this' }], true);
    assert.match(active, /id="back-btn">/);
    assert.match(active, /chose this/);
});
test('tree picker lists every tree', () => {
    const html = renderTreePicker([
        { id: 'census-mini', name: 'census-mini', version: '1', node_count: 1, leaf_count: 3 },
        { id: 'ethics-practices', name: 'ethics-practices', version: '1', node_count: 9, leaf_count: 18 },
    ]);
    assert.match(html, /census-mini \(3 practices\)/);
    assert.match(html, /ethics-practices \(18 practices\)/);
});
test('findings list keeps the export control available even when empty', () => {
    const html = renderFindings([]);
    assert.match(html, /Findings \(0\)/);
    assert.match(html, /id="export-btn"/);
});
