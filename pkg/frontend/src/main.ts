/**
 * Page wiring. The server is the source of truth: every click issues one
 * API call and the page re-renders from the returned view. On an error
 * nothing is mutated; the message is shown verbatim in the notice area.
 * The session id lives in the URL hash so a reload re-fetches the session.
 */

import { ApiClient, ApiError } from './api.js';
import type { SessionView, TreeSummary } from './types.js';
import {
    renderBreadcrumb,
    renderFindings,
    renderNotice,
    renderQuestion,
    renderTreePicker,
    renderVerdictCard,
} from './views.js';

const api = new ApiClient('');

let trees: TreeSummary[] = [];
let view: SessionView | null = null;
let notice = '';
let busy = false;

function sessionIdFromHash(): string | null {
    const match = window.location.hash.match(/^#\/session\/(.+)$/);
    return match ? match[1] : null;
}

function render(): void {
    const app = document.getElementById('app');
    if (!app) return;

    const parts: string[] = [renderNotice(notice)];
    if (view === null) {
        parts.push(renderTreePicker(trees));
    } else {
        parts.push(`<p class="session-meta">session <code>${view.session_id}</code> · tree <code>${view.tree_id}</code></p>`);
        parts.push(renderBreadcrumb(view.breadcrumb, view.can_step_back));
        if (view.at_leaf && view.leaf) {
            parts.push(renderVerdictCard(view.leaf));
        } else if (view.question) {
            parts.push(renderQuestion(view.question));
        }
        parts.push(renderFindings(view.findings));
        parts.push('<button id="new-session-btn" class="secondary">New session</button>');
    }
    app.innerHTML = parts.join('\n');
    wire(app);
}

async function act(operation: () => Promise<void>): Promise<void> {
    if (busy) return; // one mutation at a time; later clicks wait for a re-render
    busy = true;
    try {
        await operation();
        notice = '';
    } catch (error) {
        notice = error instanceof ApiError ? error.detail : String(error);
    } finally {
        busy = false;
        render();
    }
}

function selectedFilter(): string[] | undefined {
    const literature = (document.getElementById('filter-literature') as HTMLInputElement | null)?.checked ?? true;
    const standards = (document.getElementById('filter-standards') as HTMLInputElement | null)?.checked ?? true;
    if (literature && standards) return undefined;
    const chosen: string[] = [];
    if (literature) chosen.push('literature');
    if (standards) chosen.push('standards');
    return chosen;
}

function wire(app: HTMLElement): void {
    app.querySelector('#start-btn')?.addEventListener('click', () =>
        act(async () => {
            const select = document.getElementById('tree-select') as HTMLSelectElement | null;
            if (!select || !select.value) return;
            view = await api.createSession(select.value, selectedFilter());
            window.location.hash = `#/session/${view.session_id}`;
        }),
    );

    app.querySelectorAll<HTMLButtonElement>('.branch').forEach((button) =>
        button.addEventListener('click', () =>
            act(async () => {
                if (!view) return;
                view = await api.answer(view.session_id, Number(button.dataset.branch));
            }),
        ),
    );

    app.querySelector('#back-btn')?.addEventListener('click', () =>
        act(async () => {
            if (!view || !view.can_step_back) return; // disabled control: no request
            view = await api.back(view.session_id);
        }),
    );

    app.querySelector('#record-btn')?.addEventListener('click', () =>
        act(async () => {
            if (!view) return;
            view = await api.recordFinding(view.session_id);
        }),
    );

    app.querySelector('#export-btn')?.addEventListener('click', () =>
        act(async () => {
            if (!view) return;
            const { raw } = await api.exportDataset(view.session_id);
            const blob = new Blob([raw], { type: 'application/json' });
            const url = URL.createObjectURL(blob);
            const anchor = document.createElement('a');
            anchor.href = url;
            anchor.download = `walkthrough-${view.session_id}.json`;
            anchor.click();
            URL.revokeObjectURL(url);
        }),
    );

    app.querySelector('#new-session-btn')?.addEventListener('click', () => {
        view = null;
        window.location.hash = '';
        render();
    });
}

async function boot(): Promise<void> {
    try {
        trees = (await api.listTrees()).trees;
        const sessionId = sessionIdFromHash();
        if (sessionId) view = await api.getSession(sessionId);
    } catch (error) {
        notice = error instanceof ApiError ? error.detail : String(error);
        view = null;
    }
    render();
}

window.addEventListener('hashchange', () => {
    const sessionId = sessionIdFromHash();
    if (!sessionId) {
        view = null;
        render();
        return;
    }
    if (view && view.session_id === sessionId) return;
    void act(async () => {
        view = await api.getSession(sessionId);
    });
});

void boot();
