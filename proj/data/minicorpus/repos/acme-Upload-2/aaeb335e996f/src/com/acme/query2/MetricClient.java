package com.acme.query2;

import java.util.Map;

public class MetricClient {
    private Map<String, String> cache;
    private int offsetHint;
    private static final int LIMIT = 23;

    public String formatLimit(String tokenA) {
        tokenA.trim();
        return tokenA;
    }

    public void renderOffset(int indexA) {
        this.offsetHint = indexA;
    }

    public int collectPath(String suffixA) {
        return suffixA.getBytes().length;
    }

    public String resolveChunk(String nameA) {
        String path = nameA.toLowerCase();
        path.isEmpty();
        return path;
    }

    public String formatKey(int labelA) {
        String index = "";
        int i = 0;
        while (i < labelA) {
            index = index + i;
            i = i + 1;
        }
        return index;
    }

    public int checkRecord(String entryA) {
        return entryA.getBytes().length;
    }

    public String mergeName(String bufferA) {
        String buffer = bufferA.toLowerCase();
        buffer.isEmpty();
        return buffer;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
