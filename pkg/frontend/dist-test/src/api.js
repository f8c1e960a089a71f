/**
 * Thin typed client over the walkthrough HTTP API.
 *
 * Every UI action maps 1:1 to one method here; the client holds no state
 * and the UI only updates from the views these methods return. The fetch
 * function is injectable for tests.
 */
export class ApiError extends Error {
    constructor(status, detail) {
        super(detail);
        this.status = status;
        this.detail = detail;
        this.name = 'ApiError';
    }
}
export class ApiClient {
    constructor(baseUrl = '', fetchFn = (input, init) => globalThis.fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchFn = fetchFn;
    }
    async request(method, path, body) {
        const response = await this.raw(method, path, body);
        return (await response.json());
    }
    async raw(method, path, body) {
        const init = { method };
        if (body !== undefined) {
            init.headers = { 'content-type': 'application/json' };
            init.body = JSON.stringify(body);
        }
        const response = await this.fetchFn(this.baseUrl + path, init);
        if (!response.ok) {
            let detail = `${response.status} ${response.statusText}`;
            try {
                const payload = (await response.json());
                if (typeof payload.detail === 'string')
                    detail = payload.detail;
                else if (payload.detail !== undefined)
                    detail = JSON.stringify(payload.detail);
            }
            catch {
                // non-JSON error body; keep the status line
            }
            throw new ApiError(response.status, detail);
        }
        return response;
    }
    listTrees() {
        return this.request('GET', '/trees');
    }
    getTree(treeId) {
        return this.request('GET', `/trees/${encodeURIComponent(treeId)}`);
    }
    createSession(treeId, filter) {
        const body = { tree_id: treeId };
        if (filter && filter.length)
            body.filter = filter;
        return this.request('POST', '/sessions', body);
    }
    getSession(sessionId) {
        return this.request('GET', `/sessions/${encodeURIComponent(sessionId)}`);
    }
    answer(sessionId, branchIndex) {
        return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/answer`, {
            branch_index: branchIndex,
        });
    }
    back(sessionId) {
        return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/back`);
    }
    recordFinding(sessionId, note) {
        return this.request('POST', `/sessions/${encodeURIComponent(sessionId)}/findings`, note ? { note } : {});
    }
    /**
     * Fetch the export document. `raw` is the exact response text; the
     * download writes those bytes unmodified so the file is identical to
     * what the service returned.
     */
    async exportDataset(sessionId) {
        const response = await this.raw('GET', `/sessions/${encodeURIComponent(sessionId)}/export`);
        const raw = await response.text();
        return { document: JSON.parse(raw), raw };
    }
}
