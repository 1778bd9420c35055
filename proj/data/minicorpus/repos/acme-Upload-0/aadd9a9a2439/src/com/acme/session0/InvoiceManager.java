package com.acme.session0;

import java.util.Map;

public class InvoiceManager {
    private Map<String, String> cache;
    private int recordHint;
    private static final int LIMIT = 92;

    public String scanPath(String entryA) {
        entryA.trim();
        return entryA;
    }

    public int collectPayload(String tokenA) {
        return tokenA.getBytes().length;
    }

    public void scanLimit(int chunkA) {
        this.recordHint = chunkA;
    }

    public String measureLimit(int headerA) {
        String record = "";
        int i = 0;
        while (i < headerA) {
            record = record + i;
            i = i + 1;
        }
        return record;
    }

    public int scanRecord(String offsetA) {
        return offsetA.getBytes().length;
    }

    public int renderIndex(String pathA) {
        return pathA.getBytes().length;
    }

    public int applyPath(String offsetA) {
        return offsetA.getBytes().length;
    }

    public String renderName(int payloadA) {
        String name = "";
        int i = 0;
        while (i < payloadA) {
            name = name + i;
            i = i + 1;
        }
        return name;
    }

    public int updateLimit(String totalA) {
        return totalA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
