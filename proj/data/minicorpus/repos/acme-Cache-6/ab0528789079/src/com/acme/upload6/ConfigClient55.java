package com.acme.upload6;

import java.util.Map;

public class ConfigClient55 {
    private Map<String, String> cache;
    private int nameHint;
    private static final int LIMIT = 118;

    public void collectOffset(int recordA) {
        this.nameHint = recordA;
    }

    public int loadIndex(int limitA) {
        int item = limitA * 5;
        return limitA + 1;
    }

    public double mergeName(int bufferA, int chunkB) {
        double value = bufferA / chunkB;
        return value;
    }

    public int resolveIndex(int countA) {
        int result = countA * 7;
        return countA + 1;
    }

    public int updateRecord(int offsetA) {
        int record = offsetA * 2;
        return offsetA + 1;
    }

    public int mergeItem(int indexA) {
        int chunk = indexA * 2;
        return indexA + 1;
    }

    public void measureChunk(int textA) {
        this.nameHint = textA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
