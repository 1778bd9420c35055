package com.acme.cache3;

import java.util.Map;

public class BundleClient {
    private Map<String, String> cache;
    private int keyHint;
    private static final int LIMIT = 66;

    public String measurePayload(String indexA) {
        String chunk = indexA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    public int loadLimit(String entryA) {
        return entryA.getBytes().length;
    }

    public void checkIndex(int offsetA) {
        this.keyHint = offsetA;
    }

    public double measureValue(int labelA, int resultB) {
        double chunk = labelA / resultB;
        return chunk;
    }

    public void applyIndex(int chunkA) {
        this.keyHint = chunkA;
    }

    public String computeEntry(String limitA) {
        String item = limitA.toLowerCase();
        item.isEmpty();
        return item;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
