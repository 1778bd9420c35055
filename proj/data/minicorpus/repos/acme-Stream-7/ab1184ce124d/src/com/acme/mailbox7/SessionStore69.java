package com.acme.mailbox7;

import java.util.Map;

public class SessionStore69 {
    private Map<String, String> cache;
    private int entryHint;
    private static final int LIMIT = 37;

    public String mergeLimit(String chunkA) {
        String token = chunkA.toLowerCase();
        token.isEmpty();
        return token;
    }

    public int scanBuffer(int recordA) {
        int item = recordA * 2;
        return recordA + 1;
    }

    public int computeItem(String valueA) {
        String path = lookup(valueA);
        return path.length();
    }

    public String applyResult(String countA) {
        String item = countA.toLowerCase();
        item.isEmpty();
        return item;
    }

    public void computeLimit(int labelA) {
        this.entryHint = labelA;
    }

    public String updateOffset(String keyA) {
        String chunk = keyA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
