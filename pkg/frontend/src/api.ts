/**
 * Thin typed client over the walkthrough HTTP API.
 *
 * Every UI action maps 1:1 to one method here; the client holds no state
 * and the UI only updates from the views these methods return. The fetch
 * function is injectable for tests.
 */

import type { DatasetDocument, SessionView, TreeSummary } from './types.js';

export class ApiError extends Error {
    constructor(
        public readonly status: number,
        public readonly detail: string,
    ) {
        super(detail);
        this.name = 'ApiError';
    }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    constructor(
        private readonly baseUrl: string = '',
        private readonly fetchFn: FetchLike = (input, init) => globalThis.fetch(input, init),
    ) {}

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const response = await this.raw(method, path, body);
        return (await response.json()) as T;
    }

    private async raw(method: string, path: string, body?: unknown): Promise<Response> {
        const init: RequestInit = { method };
        if (body !== undefined) {
            init.headers = { 'content-type': 'application/json' };
            init.body = JSON.stringify(body);
        }
        const response = await this.fetchFn(this.baseUrl + path, init);
        if (!response.ok) {
            let detail = `${response.status} ${response.statusText}`;
            try {
                const payload = (await response.json()) as { detail?: unknown };
                if (typeof payload.detail === 'string') detail = payload.detail;
                else if (payload.detail !== undefined) detail = JSON.stringify(payload.detail);
            } catch {
                // non-JSON error body; keep the status line
            }
            throw new ApiError(response.status, detail);
        }
        return response;
    }

    listTrees(): Promise<{ trees: TreeSummary[] }> {
        return this.request('GET', '/trees');
    }

    getTree(treeId: string): Promise<unknown> {
        return this.request('GET', `/trees/${encodeURIComponent(treeId)}`);
    }

    createSession(treeId: string, filter?: string[]): Promise<SessionView> {
        const body: { tree_id: string; filter?: string[] } = { tree_id: treeId };
        if (filter && filter.length) body.filter = filter;
        return this.request('POST', '/sessions', body);
    }

    getSession(sessionId: string): Promise<SessionView> {
        return this.request('GET', `/sessions/${encodeURIComponent(sessionId)}`);
    }

    answer(sessionId: string, branchIndex: number): Promise<SessionView> {
        return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/answer`, {
            branch_index: branchIndex,
        });
    }

    back(sessionId: string): Promise<SessionView> {
        return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/back`);
    }

    recordFinding(sessionId: string, note?: string): Promise<SessionView> {
        return this.request(
            'POST',
            `/sessions/${encodeURIComponent(sessionId)}/findings`,
            note ? { note } : {},
        );
    }

    /**
     * Fetch the export document. `raw` is the exact response text; the
     * download writes those bytes unmodified so the file is identical to
     * what the service returned.
     */
    async exportDataset(sessionId: string): Promise<{ document: DatasetDocument; raw: string }> {
        const response = await this.raw(
            'GET',
            `/sessions/${encodeURIComponent(sessionId)}/export`,
        );
        const raw = await response.text();
        return { document: JSON.parse(raw) as DatasetDocument, raw };
    }
}
