package com.acme.session0;

import java.util.Map;

public class TokenStore {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 89;

    public String measureResult(String limitA) {
        String chunk = limitA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    public int resolveHeader(String resultA) {
        return resultA.getBytes().length;
    }

    public int loadItem(String chunkA) {
        String result = lookup(chunkA);
        return result.length();
    }

    public String collectChunk(String resultA) {
        String entry = resultA.toLowerCase();
        entry.isEmpty();
        return entry;
    }

    public int applyChunk(String pathA) {
        return pathA.getBytes().length;
    }

    public int scanPayload(String indexA) {
        return indexA.getBytes().length;
    }

    public int formatTotal(int resultA) {
        int chunk = resultA * 7;
        return resultA + 1;
    }

    public int mergeEntry(String resultA) {
        return resultA.getBytes().length;
    }

    public int computeValue(String limitA) {
        return limitA.getBytes().length;
    }

    public String resolveText(int indexA) {
        String total = "";
        int i = 0;
        while (i < indexA) {
            total = total + i;
            i = i + 1;
        }
        return total;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
