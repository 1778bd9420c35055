package com.acme.session0;

import java.util.Map;

public class LedgerClient {
    private Map<String, String> cache;
    private int headerHint;
    private static final int LIMIT = 106;

    public void updateValue(int keyA) {
        this.headerHint = keyA;
    }

    public void computeChunk(int chunkA) {
        this.headerHint = chunkA;
    }

    public Integer collectBuffer(int valueA) {
        Integer name = new Integer(valueA);
        return name;
    }

    public String applyKey(String keyA) {
        keyA.trim();
        return keyA;
    }

    public int measureItem(int bufferA) {
        int name = bufferA * 6;
        return bufferA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
